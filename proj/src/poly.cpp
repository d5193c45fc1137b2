/*
   Copyright 2026 The milnor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "milnor/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace milnor {

namespace {
bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

void check_nvars(int nvars) {
    if (nvars < 1 || nvars > kMaxVariables) throw std::invalid_argument("unsupported number of variables");
}
}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Poly::Poly(int nvars, const Rational& constant) : nvars_(nvars) {
    check_nvars(nvars);
    if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Poly::Poly(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    check_nvars(nvars);
    normalize();
}

Poly Poly::monomial(int nvars, const Monomial& m, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    return monomial(nvars, Monomial::variable(i));
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    // descending graded order: first and last term bound the degrees
    return terms_.front().mono.degree() == terms_.back().mono.degree();
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().mono.degree();
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.mono > x; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}
}  // namespace

Poly& Poly::operator+=(const Poly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    std::map<Monomial, Rational, std::greater<>> acc;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
    Poly r(a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, std::move(c)});
    return r;
}

Poly Poly::times(const Monomial& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;  // multiplication by a monomial preserves the order
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly result(nvars_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

Poly Poly::derivative(int i) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("variable index");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        int e = t.mono.exponent(i);
        if (e == 0) continue;
        out.push_back({t.mono.divided_by_variable(i), t.coeff * e});
    }
    return Poly(nvars_, std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("point dimension");
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < nvars_; ++i) {
            int e = t.mono.exponent(i);
            for (int k = 0; k < e; ++k) v *= point[static_cast<std::size_t>(i)];
        }
        sum += v;
    }
    return sum;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (images.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("substitution arity");
    int target = images.empty() ? 1 : images.front().nvars();
    // powers are cached per variable since terms share them heavily
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly(target, Rational(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[static_cast<std::size_t>(e)];
    };
    Poly result(target);
    for (const auto& t : terms_) {
        Poly term(target, t.coeff);
        for (int i = 0; i < nvars_; ++i) {
            int e = t.mono.exponent(i);
            if (e) term = term * power(static_cast<std::size_t>(i), e);
        }
        result += term;
    }
    return result;
}

Poly Poly::exact_divide(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this;
    Poly quot(nvars_);
    const Term& lead = divisor.leading();
    while (!rem.is_zero()) {
        const Term& t = rem.leading();
        if (!lead.mono.divides(t.mono)) throw std::domain_error("inexact polynomial division");
        Poly q = Poly::monomial(nvars_, t.mono.quotient(lead.mono), t.coeff / lead.coeff);
        rem -= divisor * q;
        quot += q;
    }
    return quot;
}

Poly Poly::primitive() const {
    if (terms_.empty()) return *this;
    Integer den(1), num(0);
    for (const auto& t : terms_) den = lcm(den, denominator(t.coeff));
    for (const auto& t : terms_) num = gcd(num, numerator(t.coeff) * (den / denominator(t.coeff)));
    Rational scale(den, num);
    if (terms_.front().coeff < 0) scale = -scale;
    return *this * scale;
}

std::string Poly::to_string(std::span<const std::string> names) const {
    if (names.size() < static_cast<std::size_t>(nvars_)) throw std::invalid_argument("too few variable names");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit = c == 1;
        bool wrote = false;
        if (!unit || t.mono.is_one()) {
            os << milnor::to_string(c);
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            int e = t.mono.exponent(i);
            if (!e) continue;
            if (wrote) os << '*';
            os << names[static_cast<std::size_t>(i)];
            if (e > 1) os << '^' << e;
            wrote = true;
        }
    }
    return os.str();
}

std::vector<Poly> partials(const Poly& f) {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
    return out;
}

std::vector<std::string> default_variable_names(int nvars) {
    static const char* letters[] = {"x", "y", "z", "w", "u", "v"};
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) {
        if (nvars <= 6)
            names.emplace_back(letters[i]);
        else
            names.push_back("x" + std::to_string(i));
    }
    return names;
}

}  // namespace milnor
