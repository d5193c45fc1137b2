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
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace milnor {

inline constexpr int kMaxVariables = 8;
inline constexpr int kMaxExponent = 127;

/// Monomial x_0^{e_0} ... x_7^{e_7} packed one byte per exponent, x_0 in the
/// most significant byte. With that layout the packed word compares like the
/// lexicographic order x_0 > x_1 > ..., so graded-lex is (degree, key).
class Monomial {
public:
    constexpr Monomial() = default;

    static Monomial from_exponents(std::span<const int> exps);
    static Monomial variable(int i, int power = 1);

    int exponent(int i) const { return static_cast<int>((key_ >> shift(i)) & 0xFFu); }
    int degree() const { return degree_; }
    std::uint64_t key() const { return key_; }
    bool is_one() const { return key_ == 0; }

    std::vector<int> exponents(int nvars) const;

    /// Throws std::overflow_error past kMaxExponent.
    Monomial operator*(const Monomial& other) const;

    /// Requires exponent(i) > 0.
    Monomial divided_by_variable(int i) const;

    bool divides(const Monomial& other) const;
    Monomial quotient(const Monomial& divisor) const;  // requires divides

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.key_ <=> b.key_;
    }

private:
    static constexpr int shift(int i) { return 8 * (kMaxVariables - 1 - i); }
    constexpr Monomial(std::uint64_t key, int degree) : key_(key), degree_(degree) {}

    std::uint64_t key_ = 0;
    int degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t x = m.key() * 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

/// dim S_m for S = Q[x_0..x_n]: C(m+n, n), zero for m < 0.
std::int64_t slice_dim(int m, int n);

/// Binomial coefficient with C(a, b) = 0 outside 0 <= b <= a.
std::int64_t binomial(std::int64_t a, std::int64_t b);

/// All monomials of degree m in n+1 variables, in descending graded-lex order.
class SliceBasis {
public:
    SliceBasis(int m, int n);

    int degree() const { return m_; }
    int n() const { return n_; }
    std::size_t size() const { return basis_.size(); }
    bool empty() const { return basis_.empty(); }
    const std::vector<Monomial>& monomials() const { return basis_; }
    const Monomial& operator[](std::size_t i) const { return basis_[i]; }

    /// Position of a degree-m monomial, or -1.
    int index(const Monomial& mono) const {
        auto it = index_.find(mono.key());
        return it == index_.end() ? -1 : it->second;
    }

private:
    int m_;
    int n_;
    std::vector<Monomial> basis_;
    std::unordered_map<std::uint64_t, int> index_;
};

}  // namespace milnor
