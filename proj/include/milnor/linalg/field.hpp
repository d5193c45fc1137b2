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

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include "milnor/rational.hpp"

namespace milnor::linalg {

/// Q as a field type for the scalar-generic assembly code.
struct RationalField {
    using Element = Rational;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(std::int64_t v) const { return Rational(v); }
    std::optional<Element> from_rational(const Rational& q) const { return q; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool is_zero(const Element& a) const { return a == 0; }
};

/// Z/p for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 3 || p >= (1u << 31)) throw std::invalid_argument("prime must be in [3, 2^31)");
    }

    std::uint32_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Element pow(Element a, std::uint64_t e) const {
        Element r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    /// Requires a != 0.
    Element inv(Element a) const { return pow(a, p_ - 2); }
    bool is_zero(Element a) const { return a == 0; }

    Element from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Element>(r < 0 ? r + p_ : r);
    }
    Element from_integer(const Integer& v) const { return static_cast<Element>(mod_u64(v, p_)); }
    /// nullopt when p divides the denominator.
    std::optional<Element> from_rational(const Rational& q) const {
        Element den = from_integer(denominator(q));
        if (den == 0) return std::nullopt;
        return mul(from_integer(numerator(q)), inv(den));
    }

    /// Symmetric representative in (-p/2, p/2].
    std::int64_t centered(Element a) const {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

private:
    std::uint32_t p_;
};

/// Deterministic Miller-Rabin for 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

/// Uniformly random prime in (2^30, 2^31).
std::uint32_t random_prime(std::mt19937_64& rng);

}  // namespace milnor::linalg
