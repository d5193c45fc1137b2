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
#include "milnor/monodromy.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace milnor {

std::int64_t PoleSpectrum::total() const {
    std::int64_t s = 0;
    for (const auto& [Q, m] : entries) s += m;
    return s;
}

std::string PoleSpectrum::to_text() const {
    if (entries.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [Q, m] : entries) {
        if (!first) out << " + ";
        first = false;
        if (m != 1) out << m << '*';
        out << "t^(" << Q << '/' << d << ')';
    }
    return out.str();
}

namespace {
bool excluded(const E2Page& page, const Cell& c) {
    return c.k == page.d && c.q == page.mode.q_max;
}
}  // namespace

PoleSpectrum spectrum_from_page(const E2Page& page) {
    PoleSpectrum s;
    s.d = page.d;
    for (const auto& c : page.cells)
        if (c.dim != 0 && !excluded(page, c)) s.entries[c.Q] += c.dim;
    return s;
}

std::int64_t eigen_dims(const E2Page& page, int k) {
    std::int64_t s = 0;
    for (const auto& c : page.cells)
        if (c.k == k && !excluded(page, c)) s += c.dim;
    return s;
}

std::int64_t euler_phi(std::int64_t m) {
    std::int64_t result = m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::int64_t CyclotomicPoly::degree() const {
    std::int64_t s = 0;
    for (const auto& [e, a] : factors) s += a * euler_phi(e);
    return s;
}

void CyclotomicPoly::set(int order, std::int64_t exponent) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    if (exponent == 0) factors.erase(order);
    else factors[order] = exponent;
}

std::int64_t CyclotomicPoly::exponent(int order) const {
    auto it = factors.find(order);
    return it == factors.end() ? 0 : it->second;
}

std::string CyclotomicPoly::to_string() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [e, a] : factors) {
        if (!out.empty()) out += '*';
        out += "Phi" + std::to_string(e);
        if (a != 1) out += '^' + std::to_string(a);
    }
    return out;
}

CyclotomicPoly CyclotomicPoly::parse(const std::string& text) {
    CyclotomicPoly p;
    if (text.empty() || text == "1") return p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected order:exponent, got '" + item + "'");
        std::size_t used = 0;
        int order = 0;
        long long exponent = 0;
        try {
            order = std::stoi(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("");
            exponent = std::stoll(item.substr(colon + 1), &used);
            if (used != item.size() - colon - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("expected order:exponent, got '" + item + "'");
        }
        p.set(order, p.exponent(order) + exponent);
    }
    return p;
}

namespace {

using IntPoly = std::vector<Integer>;

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// exact division by a monic polynomial
IntPoly divide(IntPoly a, const IntPoly& b) {
    IntPoly q(a.size() - b.size() + 1, Integer(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = a[i + b.size() - 1];
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
    return q;
}

IntPoly cyclotomic(int m) {
    IntPoly p(static_cast<std::size_t>(m) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int e = 1; e < m; ++e)
        if (m % e == 0) p = divide(p, cyclotomic(e));
    return p;
}

}  // namespace

std::vector<Integer> CyclotomicPoly::expand() const {
    IntPoly out{Integer(1)};
    for (const auto& [e, a] : factors) {
        if (a < 0) throw std::domain_error("cannot expand a negative cyclotomic exponent");
        IntPoly phi = cyclotomic(e);
        for (std::int64_t i = 0; i < a; ++i) out = mul(out, phi);
    }
    return out;
}

namespace {

int order_of(int k, int d) {
    return d / std::gcd(d, k);
}

// Common value of dims over each order class; throws on disagreement.
CyclotomicPoly assemble(const std::map<int, std::int64_t>& dims_by_k, int d, const char* what) {
    CyclotomicPoly out;
    std::map<int, std::int64_t> seen;
    for (const auto& [k, dim] : dims_by_k) {
        const int e = order_of(k, d);
        auto [it, fresh] = seen.emplace(e, dim);
        if (!fresh && it->second != dim)
            throw GaloisViolation(std::string("inconsistent eigenspace dimensions in ") + what + " for order " +
                                  std::to_string(e) + ": " + std::to_string(it->second) + " vs " +
                                  std::to_string(dim) + "; E2 differs from E_infinity or the computation is wrong");
    }
    for (const auto& [e, dim] : seen) out.set(e, dim);
    return out;
}

}  // namespace

AlexanderResult alexander_top(const E2Page& page, const std::vector<TopComputabilityCert>& certs) {
    std::map<int, std::int64_t> dims;
    for (int k = 1; k <= page.d; ++k) dims[k] = eigen_dims(page, k);
    AlexanderResult r;
    r.poly = assemble(dims, page.d, "the top degree");
    std::set<int> certified;
    bool all = false;
    for (const auto& c : certs) {
        if (c.status != "certified") continue;
        if (c.k == 0) all = true;
        certified.insert(c.k);
    }
    if (!all)
        for (int k = 1; k <= page.d; ++k)
            if (!certified.count(k)) {
                r.confidence = "conjectural";
                r.note = "assumes the E2 terms in the computed range give the whole top cohomology";
                return r;
            }
    r.confidence = "certified";
    return r;
}

AlexanderResult alexander_curve(const std::vector<Cell>& h1, int d) {
    std::map<int, std::int64_t> e;
    for (const auto& c : h1) e[c.k] = c.dim;
    if (static_cast<int>(e.size()) != d) throw std::invalid_argument("the H^1 row must cover k = 1..d");
    std::map<int, std::int64_t> m;
    m[d] = e[d];
    for (int k = 1; k < d; ++k) m[k] = e[k] + e[d - k];
    AlexanderResult r;
    r.poly = assemble(m, d, "the H^1 row");
    r.confidence = "certified";
    return r;
}

SectionAlexander alexander_h1_by_section(const Poly& f, const PageOptions& options) {
    if (f.n() == 2) {
        auto h1 = curve_h1_dims(f, options);
        return {alexander_curve(h1, f.total_degree()), GenericSection{f, {}, 0, 0}};
    }
    if (f.n() != 3) throw std::invalid_argument("Delta^1 by sections is implemented for surfaces and curves");
    GenericSection s = generic_section(f, options.seed);
    Poly g = s.section.primitive();
    auto h1 = curve_h1_dims(g, options);
    SectionAlexander out{alexander_curve(h1, g.total_degree()), std::move(s)};
    out.result.confidence = "probabilistically generic";
    out.result.note = "plane section with random coefficients, reducedness checked";
    return out;
}

CyclotomicPoly euler_solve(const std::vector<std::optional<CyclotomicPoly>>& deltas, std::int64_t chi, int d) {
    int missing = -1;
    for (std::size_t j = 0; j < deltas.size(); ++j)
        if (!deltas[j]) {
            if (missing >= 0) throw std::invalid_argument("more than one Alexander polynomial is missing");
            missing = static_cast<int>(j);
        }
    if (missing < 0) throw std::invalid_argument("no Alexander polynomial is missing");
    std::set<int> orders;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) orders.insert(e);
    for (const auto& p : deltas)
        if (p)
            for (const auto& [e, a] : p->factors) orders.insert(e);
    CyclotomicPoly out;
    for (int e : orders) {
        // sum_j (-1)^j a_j(e) = chi [e | d]
        std::int64_t rest = 0;
        for (std::size_t j = 0; j < deltas.size(); ++j)
            if (deltas[j]) rest += (j % 2 ? -1 : 1) * deltas[j]->exponent(e);
        const std::int64_t rhs = d % e == 0 ? chi : 0;
        const std::int64_t a = (missing % 2 ? -1 : 1) * (rhs - rest);
        if (a < 0)
            throw std::invalid_argument("inconsistent inputs: negative exponent " + std::to_string(a) + " for Phi" +
                                        std::to_string(e));
        out.set(e, a);
    }
    return out;
}

std::vector<TopComputabilityCert> topcomputability_check(const E2Page& page, const ExternalData& external) {
    const int n = page.n;
    std::vector<TopComputabilityCert> out;
    std::map<int, std::int64_t> sums;
    std::int64_t total = 0;
    for (int k = 1; k <= page.d; ++k) total += sums[k] = eigen_dims(page, k);
    std::set<int> decided;

    auto compare = [&](int k, std::int64_t e2, std::int64_t ext, const std::string& source) {
        TopComputabilityCert c{k, n, "", source, e2, ext, ""};
        if (ext > e2)
            throw std::invalid_argument("external dimension " + std::to_string(ext) + " exceeds the E2 bound " +
                                        std::to_string(e2) + (k ? " at k=" + std::to_string(k) : ""));
        if (ext == e2) {
            c.status = "certified";
            c.detail = "equality: E2 = E_infinity on these terms";
        } else {
            c.status = "failed";
            c.detail = "strict inequality: E2 sum " + std::to_string(e2) + " > " + std::to_string(ext);
        }
        return c;
    };

    if (external.smooth) {
        for (int k = 1; k <= page.d; ++k) {
            out.push_back({k, n, "certified", "smooth", sums[k], std::nullopt, "isolated singularity at the origin"});
            decided.insert(k);
        }
        return out;
    }
    if (external.bn) {
        out.push_back(compare(0, total, *external.bn, "external-betti"));
        if (out.back().status == "certified")
            for (int k = 1; k <= page.d; ++k) decided.insert(k);
    }
    for (const auto& [k, dim] : external.eig) {
        if (k < 1 || k > page.d) throw std::invalid_argument("eigenvalue index out of range");
        out.push_back(compare(k, sums[k], dim, "external-betti"));
        decided.insert(k);
    }
    // non-resonance only has a meaning for arrangements
    const bool arrangement = page.mode.mode == Mode::arrangement || page.mode.mode == Mode::free_lqh;
    if (arrangement) {
        for (int k : external.nonresonant) {
            if (k < 1 || k > page.d) throw std::invalid_argument("eigenvalue index out of range");
            if (!external.chi) throw std::invalid_argument("non-resonant eigenvalues need the Euler characteristic");
            std::int64_t chi_abs = *external.chi < 0 ? -*external.chi : *external.chi;
            out.push_back(compare(k, sums[k], chi_abs, "nonresonant-input"));
            decided.insert(k);
        }
    } else if (!external.nonresonant.empty()) {
        throw std::invalid_argument("non-resonant eigenvalues are only defined for arrangements");
    }
    for (int k = 1; k <= page.d; ++k)
        if (!decided.count(k))
            out.push_back({k, n, "conjectural", "none", sums[k], std::nullopt, "no external data"});
    return out;
}

std::int64_t smooth_mu(int n, int d, int a) {
    if (a < 0) return 0;
    // (1 + t + ... + t^(d-2))^(n+1)
    std::vector<std::int64_t> p{1};
    for (int i = 0; i <= n; ++i) {
        std::vector<std::int64_t> next(p.size() + static_cast<std::size_t>(std::max(d - 2, 0)), 0);
        for (std::size_t j = 0; j < p.size(); ++j)
            for (int e = 0; e <= d - 2; ++e) next[j + static_cast<std::size_t>(e)] += p[j];
        p = std::move(next);
    }
    return static_cast<std::size_t>(a) < p.size() ? p[static_cast<std::size_t>(a)] : 0;
}

SymmetryReport symmetry_report(const PoleSpectrum& spectrum) {
    SymmetryReport r;
    auto mult = [&](int Q) {
        auto it = spectrum.entries.find(Q);
        return it == spectrum.entries.end() ? std::int64_t{0} : it->second;
    };
    for (const auto& [Q, m] : spectrum.entries) {
        if (Q == spectrum.d) continue;
        if (mult(2 * spectrum.d - Q) != m) r.mismatches.push_back(Q);
    }
    r.symmetric = r.mismatches.empty();
    return r;
}

}  // namespace milnor
