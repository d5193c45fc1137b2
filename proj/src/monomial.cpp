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
#include "milnor/monomial.hpp"

#include <stdexcept>

namespace milnor {

namespace {
constexpr std::uint64_t kHighBits = 0x8080808080808080ull;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVariables))
        throw std::invalid_argument("too many variables");
    std::uint64_t key = 0;
    int deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("negative exponent");
        if (exps[i] > kMaxExponent) throw std::overflow_error("exponent too large");
        key |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<int>(i));
        deg += exps[i];
    }
    return {key, deg};
}

Monomial Monomial::variable(int i, int power) {
    if (i < 0 || i >= kMaxVariables) throw std::out_of_range("variable index");
    if (power < 0 || power > kMaxExponent) throw std::overflow_error("exponent too large");
    return {static_cast<std::uint64_t>(power) << shift(i), power};
}

std::vector<int> Monomial::exponents(int nvars) const {
    std::vector<int> out(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) out[static_cast<std::size_t>(i)] = exponent(i);
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
    // each byte is <= 127, so the byte-wise sum never carries; bit 7 flags overflow
    std::uint64_t key = key_ + other.key_;
    if (key & kHighBits) throw std::overflow_error("monomial exponent overflow");
    return {key, degree_ + other.degree_};
}

Monomial Monomial::divided_by_variable(int i) const {
    return {key_ - (std::uint64_t{1} << shift(i)), degree_ - 1};
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVariables; ++i)
        if (exponent(i) > other.exponent(i)) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    return {key_ - divisor.key_, degree_ - divisor.degree_};
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

std::int64_t slice_dim(int m, int n) {
    if (m < 0) return 0;
    return binomial(m + n, n);
}

namespace {
void enumerate(int var, int n, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
    if (var == n) {
        exps[static_cast<std::size_t>(var)] = remaining;
        out.push_back(Monomial::from_exponents(exps));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[static_cast<std::size_t>(var)] = e;
        enumerate(var + 1, n, remaining - e, exps, out);
    }
}
}  // namespace

SliceBasis::SliceBasis(int m, int n) : m_(m), n_(n) {
    if (n < 0 || n + 1 > kMaxVariables) throw std::invalid_argument("unsupported number of variables");
    if (m < 0) return;
    if (m > kMaxExponent) throw std::overflow_error("slice degree too large");
    basis_.reserve(static_cast<std::size_t>(slice_dim(m, n)));
    std::vector<int> exps(static_cast<std::size_t>(n + 1), 0);
    enumerate(0, n, m, exps, basis_);
    index_.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i].key(), static_cast<int>(i));
}

}  // namespace milnor
