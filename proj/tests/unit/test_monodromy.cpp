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

#include "milnor/monodromy.hpp"
#include "milnor/parse.hpp"
#include "milnor/spectral.hpp"
#include "milnor/syzygy.hpp"
#include "support/fixtures.hpp"

using namespace milnor;
using milnor::testing::Fixture;

namespace {

// Hand-made page with the given dimensions at (q, k).
E2Page fake_page(Mode mode, int n, int d, const std::map<std::pair<int, int>, std::int64_t>& dims) {
    E2Page page;
    page.n = n;
    page.d = d;
    page.mode = ModeSpec::make(mode, n, d);
    for (int q = 0; q <= page.mode.q_max; ++q)
        for (int k = 1; k <= d; ++k) {
            auto it = dims.find({q, k});
            page.cells.push_back({q, k, q * d + k, it == dims.end() ? 0 : it->second, "certified", 0});
        }
    return page;
}

std::vector<Integer> t_power_minus_one(int m) {
    std::vector<Integer> p(static_cast<std::size_t>(m) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    return p;
}

CyclotomicPoly C(const char* s) { return CyclotomicPoly::parse(s); }

}  // namespace

TEST_CASE("Euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(18) == 6);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("cyclotomic products") {
    CyclotomicPoly p = C("1:8,2:2,3:2,6:2");
    CHECK(p.degree() == 8 + 2 + 4 + 4);
    CHECK(p.to_string() == "Phi1^8*Phi2^2*Phi3^2*Phi6^2");
    CHECK(CyclotomicPoly::parse("1:8,2:2,3:2,6:2") == p);
    CHECK(C("1").is_one());
    CHECK(C("").to_string() == "1");
    CHECK(C("1:2,1:-2").is_one());
    CHECK_THROWS_AS(CyclotomicPoly::parse("Phi1"), std::invalid_argument);
    CHECK_THROWS_AS(CyclotomicPoly::parse("0:1"), std::invalid_argument);

    CHECK(C("6:1").expand() == std::vector<Integer>{1, -1, 1});
    // t^d - 1 is the product of Phi_e over the divisors e of d
    for (int d : {1, 4, 6, 12, 18}) {
        CyclotomicPoly all;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) all.set(e, 1);
        CHECK(all.expand() == t_power_minus_one(d));
        CHECK(all.degree() == d);
    }
}

TEST_CASE("Euler characteristic solve") {
    // six planes, chi = -2
    std::vector<std::optional<CyclotomicPoly>> deltas{C("1:1"), C("1:5"), std::nullopt, C("1:8,2:2,3:2,6:2")};
    CHECK(euler_solve(deltas, -2, 6) == C("1:10"));
    // braid arrangement, chi = -6
    deltas = {C("1:1"), C("1:9"), std::nullopt, C("1:24,2:8,5:6,10:6")};
    CHECK(euler_solve(deltas, -6, 10) == C("1:26,2:2"));
    // solving for the top one instead
    deltas = {C("1:1"), C("1:9"), C("1:26,2:2"), std::nullopt};
    CHECK(euler_solve(deltas, -6, 10) == C("1:24,2:8,5:6,10:6"));
    // re-substitution: exponents of prod (Delta^j)^(-1)^j equal chi times those of t^d - 1
    for (int chi : {-7, 0, 3}) {
        deltas = {C("1:1"), C("1:4,2:1"), std::nullopt, C("1:30,2:20,3:12,6:12")};
        deltas[2] = C("1:100,2:100,3:100,6:100");
        auto solved = euler_solve({deltas[0], deltas[1], deltas[2], std::nullopt}, chi, 6);
        for (int e : {1, 2, 3, 6})
            CHECK(deltas[0]->exponent(e) - deltas[1]->exponent(e) + deltas[2]->exponent(e) - solved.exponent(e) ==
                  chi);
    }
    // two unknowns, or a negative solution
    CHECK_THROWS_AS(euler_solve({C("1:1"), std::nullopt, std::nullopt}, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(euler_solve({C("1:1"), C("1:9"), std::nullopt}, -5, 3), std::invalid_argument);
}

TEST_CASE("top Alexander polynomial from a page") {
    auto page = fake_page(Mode::arrangement, 3, 6, {{{0, 4}, 1}, {{0, 5}, 2}, {{0, 6}, 8}, {{1, 1}, 2}});
    // k=1 and k=5 (order 6) get 2 each, k=2 and k=4 (order 3) get 0 and 1: inconsistent
    CHECK_THROWS_AS(alexander_top(page), GaloisViolation);
    page = fake_page(Mode::arrangement, 3, 6,
                     {{{0, 4}, 1}, {{0, 5}, 2}, {{0, 6}, 8}, {{1, 1}, 2}, {{1, 2}, 1}, {{1, 3}, 2}});
    auto r = alexander_top(page);
    CHECK(r.poly == C("1:8,2:2,3:1,6:2"));
    CHECK(r.confidence == "conjectural");
    auto spec = spectrum_from_page(page);
    CHECK(spec.total() == r.poly.degree());
}

TEST_CASE("spectrum leaves out the last cell of the general page") {
    auto page = fake_page(Mode::general, 3, 4, {{{0, 4}, 1}, {{3, 4}, 7}, {{1, 2}, 1}});
    auto s = spectrum_from_page(page);
    CHECK(s.entries == std::map<int, std::int64_t>{{4, 1}, {6, 1}});
    CHECK(eigen_dims(page, 4) == 1);
    CHECK(s.to_text() == "t^(4/4) + t^(6/4)");
    CHECK(PoleSpectrum{}.to_text() == "0");
}

TEST_CASE("top-computability") {
    auto page = fake_page(Mode::general, 3, 4, {{{0, 4}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{1, 4}, 1}});
    ExternalData none;
    auto certs = topcomputability_check(page, none);
    REQUIRE(certs.size() == 4);
    for (const auto& c : certs) CHECK(c.status == "conjectural");

    ExternalData five;
    five.bn = 5;
    certs = topcomputability_check(page, five);
    CHECK(certs.front().status == "certified");
    CHECK(certs.front().k == 0);
    CHECK(alexander_top(page, certs).confidence == "certified");

    ExternalData four;
    four.bn = 4;
    certs = topcomputability_check(page, four);
    CHECK(certs.front().status == "failed");
    CHECK(certs.front().detail == "strict inequality: E2 sum 5 > 4");
    CHECK(alexander_top(page, certs).confidence == "conjectural");

    ExternalData six;
    six.bn = 6;
    CHECK_THROWS_AS(topcomputability_check(page, six), std::invalid_argument);

    ExternalData eig;
    eig.eig[2] = 1;
    certs = topcomputability_check(page, eig);
    CHECK(certs.front().k == 2);
    CHECK(certs.front().status == "certified");

    ExternalData nonres;
    nonres.nonresonant = {1};
    CHECK_THROWS_AS(topcomputability_check(page, nonres), std::invalid_argument);
}

TEST_CASE("non-resonant eigenvalues of an arrangement") {
    auto fx = milnor::testing::fixture("braid_a4");
    auto page = compute_page(fx.f, Mode::arrangement);
    ExternalData ext;
    ext.chi = -6;
    ext.nonresonant = {1, 2, 3, 4, 6, 7, 8, 9};
    auto certs = topcomputability_check(page, ext);
    int certified = 0;
    for (const auto& c : certs)
        if (c.source == "nonresonant-input") {
            CHECK(c.status == "certified");
            ++certified;
        }
    CHECK(certified == 8);
    ext.nonresonant = {1};
    ext.chi.reset();
    CHECK_THROWS_AS(topcomputability_check(page, ext), std::invalid_argument);
}

TEST_CASE("Milnor number pattern") {
    CHECK(smooth_mu(2, 3, 0) == 1);
    CHECK(smooth_mu(2, 3, 1) == 3);
    CHECK(smooth_mu(2, 3, 2) == 3);
    CHECK(smooth_mu(2, 3, 3) == 1);
    CHECK(smooth_mu(2, 3, 4) == 0);
    CHECK(smooth_mu(2, 3, -1) == 0);
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 4}, {3, 6}}) {
        std::int64_t sum = 0, expected = 1;
        for (int a = 0; a <= (n + 1) * (d - 2); ++a) sum += smooth_mu(n, d, a);
        for (int i = 0; i <= n; ++i) expected *= d - 1;
        CHECK(sum == expected);
        CHECK(smooth_mu(n, d, (n + 1) * (d - 2) + 1) == 0);
    }
}

TEST_CASE("symmetry of spectra") {
    CHECK(symmetry_report(PoleSpectrum{}).symmetric);
    PoleSpectrum s;
    s.d = 6;
    s.entries = {{4, 1}, {5, 2}, {6, 8}, {7, 2}, {8, 1}};
    CHECK(symmetry_report(s).symmetric);
    s.entries[9] = 3;
    auto r = symmetry_report(s);
    CHECK_FALSE(r.symmetric);
    CHECK(r.mismatches == std::vector<int>{9});
}

TEST_CASE("plane curves") {
    std::vector<Cell> h1;
    for (int k = 1; k <= 4; ++k) h1.push_back({0, k, k, 0, "certified", 0});
    CHECK(alexander_curve(h1, 4).poly.is_one());
    h1.pop_back();
    CHECK_THROWS_AS(alexander_curve(h1, 4), std::invalid_argument);
}

TEST_CASE("fixtures: spectra, Alexander polynomials, freeness") {
    for (const auto& fx : milnor::testing::all_fixtures()) {
        if (fx.slow()) continue;
        CAPTURE(fx.name);
        const int n = fx.f.n(), d = fx.degree();
        auto page = compute_page(fx.f, fx.mode());
        auto spectrum = spectrum_from_page(page);
        if (fx.has("spectrum")) CHECK(spectrum.entries == fx.int_map("spectrum"));
        if (fx.has("symmetric")) CHECK(symmetry_report(spectrum).symmetric == (fx.get("symmetric") == "yes"));

        ExternalData ext;
        if (fx.has("bn")) ext.bn = std::stoll(fx.get("bn"));
        ext.smooth = fx.has("smooth") && fx.get("smooth") == "yes";
        auto certs = topcomputability_check(page, ext);
        if (fx.has("top")) CHECK(certs.front().status == fx.get("top"));
        if (fx.has("top") && fx.get("top") == "failed") continue;

        auto top = alexander_top(page, certs);
        CHECK(spectrum.total() == top.poly.degree());
        std::int64_t eig_sum = 0;
        for (int k = 1; k <= d; ++k) eig_sum += eigen_dims(page, k);
        CHECK(eig_sum == spectrum.total());
        if (fx.has("delta3") && n == 3) CHECK(top.poly == fx.cyclotomic("delta3"));

        auto gens = minimal_generators(fx.f, d - 1);
        auto free = saito_check(fx.f, gens);
        if (fx.has("free")) CHECK(free.is_free == (fx.get("free") == "yes"));
        if (fx.has("exponents")) CHECK(free.exponents == fx.int_list("exponents"));
        if (fx.has("chi") && free.is_free) CHECK(poincare_free(free.exponents).chi == std::stoll(fx.get("chi")));

        if (fx.has("delta1")) {
            CyclotomicPoly d1 = n == 2 ? alexander_curve(curve_h1_dims(fx.f), d).poly
                                       : alexander_h1_by_section(fx.f, {}).result.poly;
            CHECK(d1 == fx.cyclotomic("delta1"));
            if (n == 3 && fx.has("chi") && fx.has("delta2"))
                CHECK(euler_solve({C("1:1"), d1, std::nullopt, top.poly}, std::stoll(fx.get("chi")), d) ==
                      fx.cyclotomic("delta2"));
        }
    }
}
