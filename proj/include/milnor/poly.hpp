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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "milnor/monomial.hpp"
#include "milnor/rational.hpp"

namespace milnor {

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse polynomial with rational coefficients in nvars variables
/// x_0, ..., x_{nvars-1}. Terms are kept sorted in descending graded-lex order
/// and never carry a zero coefficient.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars);
    Poly(int nvars, const Rational& constant);
    Poly(int nvars, std::vector<Term> terms);  // merges duplicates, drops zeros

    static Poly monomial(int nvars, const Monomial& m, const Rational& c = Rational(1));
    static Poly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    /// Index of the last variable; the ambient space is P^n.
    int n() const { return nvars_ - 1; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    /// Maximal total degree of a term; -1 for zero.
    int total_degree() const;
    bool is_homogeneous() const;
    /// Degree when homogeneous and nonzero; nullopt for zero or inhomogeneous.
    std::optional<int> homogeneous_degree() const;

    Rational coefficient(const Monomial& m) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly times(const Monomial& m) const;
    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b);

    /// Partial derivative with respect to x_i.
    Poly derivative(int i) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Replaces x_i by images[i]; all images must share one variable count.
    Poly substitute(std::span<const Poly> images) const;

    /// Exact quotient by a divisor that is known to divide; throws
    /// std::domain_error when the division leaves a remainder.
    Poly exact_divide(const Poly& divisor) const;

    /// Scaled so that coefficients are coprime integers with a positive
    /// leading coefficient. Zero stays zero.
    Poly primitive() const;

    /// Text in the input grammar, e.g. "2*x^2*y - 3/4*z".
    std::string to_string(std::span<const std::string> names) const;

private:
    void normalize();

    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// ∂f/∂x_i for i = 0..n.
std::vector<Poly> partials(const Poly& f);

/// x, y, z, w, u, v for up to six variables, otherwise x0, x1, ...
std::vector<std::string> default_variable_names(int nvars);

}  // namespace milnor
