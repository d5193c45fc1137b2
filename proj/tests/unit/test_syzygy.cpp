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

#include "milnor/forms.hpp"
#include "milnor/parse.hpp"
#include "milnor/syzygy.hpp"
#include "support/random_poly.hpp"

using namespace milnor;

namespace {
const std::vector<std::string> xyzw{"x", "y", "z", "w"};
Poly P(const char* s) { return parse_poly(s, xyzw); }

const char* kNonFree = "x*y*z*w*(x+y+z)*(y-z+w)";
const char* kDiscriminant = "y^2*z^2-4*x*z^3-4*y^3*w+18*x*y*z*w-27*x^2*w^2";
const char* kBraid = "x*y*z*w*(x-y)*(x-z)*(x-w)*(y-z)*(y-w)*(z-w)";
const char* kD4 = "(x^2-y^2)*(x^2-z^2)*(x^2-w^2)*(y^2-z^2)*(y^2-w^2)*(z^2-w^2)";
}  // namespace

TEST_CASE("degree slices of the relation module") {
    Poly fermat = P("x^4+y^4+z^4+w^4");
    CHECK(ar_slice(fermat, 0).empty());
    CHECK(ar_slice(fermat, 2).empty());
    CHECK(ar_slice(fermat, 3).size() == 6);
    CHECK(ar_slice(P(kNonFree), 1).empty());
    auto two = ar_slice(P(kNonFree), 2);
    CHECK(two.size() == 2);
    for (const auto& s : two) CHECK(is_syzygy(P(kNonFree), s.r));
    CHECK(ar_slice(P(kBraid), 1).empty());
    CHECK(ar_slice(P(kBraid), 2).size() == 1);
}

TEST_CASE("minimal generators of a non-free arrangement") {
    Poly f = P(kNonFree);
    auto gens = minimal_generators(f, 3);
    CHECK(gens.degrees() == std::vector<int>{2, 2, 3, 3, 3, 3});
    for (const auto& g : gens.gens) CHECK(is_syzygy(f, g.r));
    CHECK_FALSE(gens.generates_module);
    auto exact = minimal_generators(f, 3, {linalg::KernelMethod::exact, 5, true});
    CHECK(exact.degrees() == gens.degrees());
    auto rep = saito_check(f, gens);
    CHECK_FALSE(rep.is_free);
    // nothing new appears in degree 4 or 5
    CHECK(minimal_generators(f, 5).degrees() == gens.degrees());
}

TEST_CASE("Koszul syzygies of a smooth surface") {
    Poly f = P("x^4+y^4+z^4+w^4");
    auto gens = minimal_generators(f, 3);
    CHECK(gens.degrees() == std::vector<int>(6, 3));
    CHECK_FALSE(saito_check(f, gens).is_free);
}

TEST_CASE("Koszul syzygies lie in the span of the generators") {
    Poly f = P(kNonFree);
    auto gens = minimal_generators(f, 5);
    const int q = 5;  // d - 1
    FormSliceBasis basis(FormKind::n_form, q + 3, 3);
    std::vector<linalg::Triplet> t;
    int col = 0;
    auto add = [&](const std::vector<Poly>& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            for (const auto& term : r[i].terms())
                t.emplace_back(basis.index(static_cast<int>(i), term.mono), col, term.coeff);
        ++col;
    };
    for (const auto& g : gens.gens) {
        SliceBasis shifts(q - g.degree, 3);
        for (const auto& m : shifts.monomials()) {
            std::vector<Poly> r;
            for (const auto& c : g.r) r.push_back(c.times(m));
            add(r);
        }
    }
    const int span_cols = col;
    auto span_rank = linalg::rank_exact(linalg::make_sparse(static_cast<int>(basis.size()), span_cols, t)).rank;
    auto fi = partials(f);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<Poly> k(4, Poly(4));
            k[static_cast<std::size_t>(i)] = fi[static_cast<std::size_t>(j)];
            k[static_cast<std::size_t>(j)] = -fi[static_cast<std::size_t>(i)];
            add(k);
        }
    auto all_rank = linalg::rank_exact(linalg::make_sparse(static_cast<int>(basis.size()), col, t)).rank;
    CHECK(all_rank == span_rank);
}

TEST_CASE("free surfaces") {
    auto disc = minimal_generators(P(kDiscriminant), 1);
    CHECK(disc.degrees() == std::vector<int>{1, 1, 1});
    auto rep = saito_check(P(kDiscriminant), disc);
    CHECK(rep.is_free);
    CHECK(rep.exponents == std::vector<int>{1, 1, 1});
    CHECK(rep.determinant_scale != 0);

    auto braid = minimal_generators(P(kBraid), 7);
    CHECK(braid.generates_module);
    CHECK(braid.degrees() == std::vector<int>{2, 3, 4});
    CHECK(saito_check(P(kBraid), braid).is_free);

    auto d4 = minimal_generators(P(kD4), 9);
    CHECK(d4.generates_module);
    CHECK(d4.degrees() == std::vector<int>{3, 3, 5});
}

TEST_CASE("determinants") {
    std::mt19937_64 rng(3);
    // Bareiss path (5 x 5) against the Leibniz formula
    std::vector<std::vector<Poly>> m(5);
    for (auto& row : m)
        for (int j = 0; j < 5; ++j) row.push_back(testing::random_homogeneous(3, 1, 2, rng));
    std::vector<int> perm{0, 1, 2, 3, 4};
    Poly leibniz(3);
    do {
        int inversions = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) inversions += perm[a] > perm[b];
        Poly term(3, Rational(1));
        for (int r = 0; r < 5; ++r) term = term * m[r][perm[r]];
        if (inversions % 2) leibniz -= term;
        else leibniz += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(determinant(m) == leibniz);
    m[2] = m[4];
    CHECK(determinant(m).is_zero());
}

TEST_CASE("Poincare polynomial of free arrangements") {
    auto p = poincare_free({2, 3, 4});
    CHECK(p.chi == -6);
    CHECK(p.coefficients == std::vector<Integer>{1, 9, 26, 24});
    CHECK(poincare_free({3, 3, 5}).chi == -16);
    CHECK(poincare_free({4, 6, 7}).chi == -90);
    CHECK(poincare_free({}).chi == 1);
}
