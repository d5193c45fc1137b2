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
#include <stdexcept>
#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

/// Dense univariate polynomial over Q, coefficient of s^i at index i, no
/// trailing zeros.
using UniPoly = std::vector<Rational>;

UniPoly uni_trim(UniPoly p);
UniPoly uni_derivative(const UniPoly& p);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly uni_gcd(UniPoly a, UniPoly b);

/// Raised when no usable random line or hyperplane is found within the retry
/// budget.
class DegenerateRestriction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a hyperplane section is not reduced, so it cannot serve as a
/// generic section.
class NonReducedSection : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// f restricted to the affine line a + s*b, as a polynomial in s.
UniPoly restrict_to_line(const Poly& f, const std::vector<Rational>& a, const std::vector<Rational>& b);

/// One-sided squarefreeness test for a nonzero homogeneous f.
///
/// Each round restricts f to a random line a + s*b with f(b) != 0 and tests
/// the restriction with a univariate gcd. A squarefree restriction proves f
/// squarefree, so true is certain. false means every round saw a repeated
/// root, which a squarefree f only produces for unlucky lines.
bool squarefree_probabilistic(const Poly& f, std::uint64_t seed, int rounds = 3);

/// Substitutes x_n := c_0 x_0 + ... + c_{n-1} x_{n-1}; the result lives in
/// n variables and has the degree of f (or is zero).
Poly restrict_hyperplane(const Poly& f, const std::vector<Rational>& coefficients);

/// Random coefficients with numerator and denominator in [-99, 99], drawn
/// from seed.
std::vector<Rational> random_hyperplane(int count, std::uint64_t seed);

/// restrict_hyperplane with random_hyperplane coefficients; throws
/// NonReducedSection when the section fails the squarefreeness test.
Poly restrict_generic_hyperplane(const Poly& f, std::uint64_t seed);

struct GenericSection {
    Poly section;
    std::vector<Rational> coefficients;
    std::uint64_t seed = 0;
    int attempts = 0;
};

/// Retries restrict_generic_hyperplane with derived seeds. The section is
/// only probabilistically generic.
GenericSection generic_section(const Poly& f, std::uint64_t seed, int max_attempts = 8);

}  // namespace milnor
