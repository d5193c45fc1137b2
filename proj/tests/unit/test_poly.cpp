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
#include <doctest.h>

#include <random>

#include "milnor/genericity.hpp"
#include "milnor/monomial.hpp"
#include "milnor/parse.hpp"
#include "milnor/poly.hpp"
#include "support/random_poly.hpp"

using namespace milnor;

namespace {
const std::vector<std::string> xyzw{"x", "y", "z", "w"};
const std::vector<std::string> xyz{"x", "y", "z"};
}  // namespace

TEST_CASE("monomial order is graded lex with x0 largest") {
    Monomial x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
    CHECK(x > y);
    CHECK(y > z);
    CHECK(z * z > x);          // degree first
    CHECK(x * z > y * y);      // then lex
    CHECK((x * y).exponent(0) == 1);
    CHECK((x * y).divided_by_variable(1) == x);
    CHECK(x.divides(x * y));
    CHECK_FALSE(z.divides(x * y));
}

TEST_CASE("slice bases match binomial dimensions") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 40; m += (n >= 3 ? 3 : 1)) {
            SliceBasis b(m, n);
            REQUIRE(static_cast<std::int64_t>(b.size()) == slice_dim(m, n));
            for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i] > b[i + 1]);
            for (std::size_t i = 0; i < b.size(); i += 7) CHECK(b.index(b[i]) == static_cast<int>(i));
        }
    CHECK(slice_dim(-1, 3) == 0);
    CHECK(slice_dim(0, 3) == 1);
    CHECK(slice_dim(8, 3) == 165);
    CHECK(SliceBasis(-2, 2).empty());
}

TEST_CASE("parsing expands products and reports degree") {
    Poly f = parse_poly("x*y*z*w*(x+y+z)*(y-z+w)", xyzw);
    CHECK(f.homogeneous_degree() == 6);
    CHECK(f.nvars() == 4);
    CHECK(f.size() == 7);

    Poly disc = parse_poly("y^2*z^2-4*x*z^3-4*y^3*w+18*x*y*z*w-27*x^2*w^2", xyzw);
    CHECK(disc.size() == 5);
    CHECK(disc.homogeneous_degree() == 4);

    Poly zero = parse_poly("0", xyzw);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.homogeneous_degree().has_value());

    CHECK_FALSE(parse_poly("x^2 + y", xyz).homogeneous_degree().has_value());
    CHECK(parse_poly("3/4*x - x*3/4", xyz).is_zero());
    CHECK(parse_poly("-(x-y)^3", xyz) == parse_poly("(y-x)^3", xyz));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_poly("x*q", xyz), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1", xyz), ParseError);
    CHECK_THROWS_AS(parse_poly("2x", xyz), ParseError);
    CHECK_THROWS_AS(parse_poly("(x+y", xyz), ParseError);
    CHECK_THROWS_AS(parse_poly("x/y", xyz), ParseError);
    CHECK_THROWS_AS(parse_poly("x/0", xyz), ParseError);
    try {
        parse_poly("x + * y", xyz);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Poly f = testing::random_homogeneous(4, 1 + trial % 6, 6, rng) * Rational(1, 1 + trial % 5);
        CHECK(parse_poly(f.to_string(xyzw), xyzw) == f);
    }
    CHECK(parse_poly("x", xyz).to_string(xyz) == "x");
    CHECK(Poly(3).to_string(xyz) == "0");
}

TEST_CASE("partial derivatives") {
    auto p = partials(parse_poly("x^2+y^2", {"x", "y"}));
    REQUIRE(p.size() == 2);
    CHECK(p[0] == parse_poly("2*x", {"x", "y"}));
    CHECK(p[1] == parse_poly("2*y", {"x", "y"}));
    auto q = partials(parse_poly("x*y*z*w", xyzw));
    CHECK(q[0] == parse_poly("y*z*w", xyzw));
    CHECK(q[3] == parse_poly("x*y*z", xyzw));
}

TEST_CASE("Euler identity on random homogeneous polynomials") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 100; ++trial) {
        const int nvars = 2 + trial % 4;
        const int d = 1 + trial % 9;
        Poly f = testing::random_homogeneous(nvars, d, 8, rng);
        Poly lhs(nvars);
        auto fi = partials(f);
        for (int i = 0; i < nvars; ++i) lhs += Poly::variable(nvars, i) * fi[static_cast<std::size_t>(i)];
        CHECK(lhs == f * Rational(d));
    }
}

TEST_CASE("product of linear forms is homogeneous of degree = number of factors") {
    std::mt19937_64 rng(5);
    for (int k = 1; k <= 7; ++k) {
        Poly f(4, Rational(1));
        for (int j = 0; j < k; ++j) f = f * testing::random_homogeneous(4, 1, 4, rng);
        CHECK(f.homogeneous_degree() == k);
    }
}

TEST_CASE("exact division and primitive part") {
    Poly a = parse_poly("x^2 - y^2", xyz), b = parse_poly("x + y", xyz);
    CHECK(a.exact_divide(b) == parse_poly("x - y", xyz));
    CHECK_THROWS_AS(a.exact_divide(parse_poly("x + z", xyz)), std::domain_error);
    CHECK(parse_poly("-6/5*x + 4/5*y", xyz).primitive() == parse_poly("3*x - 2*y", xyz));
}

TEST_CASE("squarefree detection on random lines") {
    CHECK(squarefree_probabilistic(parse_poly("x*y*z*w*(x+y+z)*(y-z+w)", xyzw), 1));
    CHECK_FALSE(squarefree_probabilistic(parse_poly("x^2*y", xyz), 1));
    CHECK_FALSE(squarefree_probabilistic(parse_poly("(x+y)^2*(x-y)", xyz), 7));
    CHECK(squarefree_probabilistic(parse_poly("x^3+y^3+z^3", xyz), 3));
}

TEST_CASE("generic hyperplane sections") {
    Poly fermat = parse_poly("x^3+y^3+z^3+w^3", xyzw);
    Poly g = restrict_generic_hyperplane(fermat, 17);
    CHECK(g.nvars() == 3);
    CHECK(g.homogeneous_degree() == 3);

    // a deliberately special plane: z := x turns x*y*z into x^2*y
    Poly special = restrict_hyperplane(parse_poly("x*y*z", xyz), {Rational(1), Rational(0)});
    CHECK(special == parse_poly("x^2*y", {"x", "y"}));
    CHECK_FALSE(squarefree_probabilistic(special, 1));

    auto s = generic_section(parse_poly("y^2*z^2-4*x*z^3-4*y^3*w+18*x*y*z*w-27*x^2*w^2", xyzw), 9);
    CHECK(s.section.homogeneous_degree() == 4);
    CHECK(s.coefficients.size() == 3);
}
