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
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace milnor {

using Integer = boost::multiprecision::mpz_int;

/// Exact rational number. GMP keeps it canonical: lowest terms, positive
/// denominator, zero stored as 0/1.
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Residue of an integer in [0, p).
std::uint64_t mod_u64(const Integer& a, std::uint64_t p);

}  // namespace milnor
