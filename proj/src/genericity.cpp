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
#include "milnor/genericity.hpp"

#include <random>

namespace milnor {

UniPoly uni_trim(UniPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return uni_trim(std::move(d));
}

namespace {
UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a = uni_trim(std::move(a));
    }
    return a;
}

UniPoly monic(UniPoly p) {
    if (p.empty()) return p;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}
}  // namespace

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        UniPoly r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

UniPoly restrict_to_line(const Poly& f, const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Poly line(1, a[i]);
        line += Poly::variable(1, 0) * b[i];
        images.push_back(std::move(line));
    }
    Poly g = f.substitute(images);
    UniPoly out(static_cast<std::size_t>(std::max(g.total_degree(), 0) + 1));
    for (const auto& t : g.terms()) out[static_cast<std::size_t>(t.mono.degree())] = t.coeff;
    return uni_trim(std::move(out));
}

bool squarefree_probabilistic(const Poly& f, std::uint64_t seed, int rounds) {
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("squarefree test needs a nonzero homogeneous polynomial");
    if (*d <= 1) return true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-99, 99);
    const auto nv = static_cast<std::size_t>(f.nvars());
    constexpr int kMaxDraws = 32;
    for (int round = 0; round < rounds; ++round) {
        std::vector<Rational> a(nv), b(nv);
        int draws = 0;
        do {
            if (++draws > kMaxDraws) throw DegenerateRestriction("no line with f(direction) != 0 found");
            for (std::size_t i = 0; i < nv; ++i) {
                a[i] = coord(rng);
                b[i] = coord(rng);
            }
        } while (f.evaluate(b) == 0);
        UniPoly g = restrict_to_line(f, a, b);
        if (uni_gcd(g, uni_derivative(g)).size() <= 1) return true;
    }
    return false;
}

Poly restrict_hyperplane(const Poly& f, const std::vector<Rational>& coefficients) {
    const int n = f.n();
    if (f.nvars() < 3) throw std::invalid_argument("hyperplane sections need at least three variables");
    if (coefficients.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("expected one coefficient per remaining variable");
    std::vector<Poly> images;
    Poly last(n);
    for (int i = 0; i < n; ++i) {
        images.push_back(Poly::variable(n, i));
        last += Poly::variable(n, i) * coefficients[static_cast<std::size_t>(i)];
    }
    images.push_back(std::move(last));
    return f.substitute(images);
}

std::vector<Rational> random_hyperplane(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 99);
    std::vector<Rational> c;
    for (int i = 0; i < count; ++i) {
        int p = num(rng);
        c.emplace_back(p, den(rng));
    }
    return c;
}

Poly restrict_generic_hyperplane(const Poly& f, std::uint64_t seed) {
    Poly g = restrict_hyperplane(f, random_hyperplane(f.n(), seed));
    if (g.is_zero() || g.homogeneous_degree() != f.homogeneous_degree())
        throw NonReducedSection("hyperplane is a component of the hypersurface");
    if (!squarefree_probabilistic(g, seed ^ 0x5bd1e995u))
        throw NonReducedSection("hyperplane section is not reduced");
    return g;
}

GenericSection generic_section(const Poly& f, std::uint64_t seed, int max_attempts) {
    std::mt19937_64 seeds(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::uint64_t s = seeds();
        try {
            Poly g = restrict_generic_hyperplane(f, s);
            return {std::move(g), random_hyperplane(f.n(), s), s, attempt};
        } catch (const NonReducedSection&) {
        }
    }
    throw DegenerateRestriction("no reduced hyperplane section found");
}

}  // namespace milnor
