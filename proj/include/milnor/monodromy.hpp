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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/genericity.hpp"
#include "milnor/spectral.hpp"

namespace milnor {

/// Multiplicities of the pole order spectrum at alpha = Q / d.
struct PoleSpectrum {
    int d = 1;
    std::map<int, std::int64_t> entries;  // Q -> multiplicity, zeros omitted

    std::int64_t total() const;
    /// "t^(4/6) + 2*t^(5/6) + ...", "0" when empty.
    std::string to_text() const;
};

/// General mode leaves out the cell (q, k) = (n, d): its E_infinity term
/// vanishes, so the spectrum never counts it.
PoleSpectrum spectrum_from_page(const E2Page& page);

/// Sum of the cell dimensions over the computed q for this k, leaving out
/// q = q_max when k = d; an upper bound for dim H^n(F)_lambda with
/// lambda = exp(-2 pi i k / d), sharp when top-computable.
std::int64_t eigen_dims(const E2Page& page, int k);

std::int64_t euler_phi(std::int64_t m);

/// Product of cyclotomic polynomials Phi_order^exponent. Exponents may be
/// negative in intermediate results only.
struct CyclotomicPoly {
    std::map<int, std::int64_t> factors;  // order -> exponent, zeros omitted

    std::int64_t degree() const;
    bool is_one() const { return factors.empty(); }
    /// "Phi1^8*Phi2^2", "1" for the unit.
    std::string to_string() const;
    /// Coefficients of the expanded polynomial, constant term first.
    std::vector<Integer> expand() const;
    void set(int order, std::int64_t exponent);
    std::int64_t exponent(int order) const;

    /// Inverse of the "1:8,2:2" list form; "1" or "" is the unit.
    static CyclotomicPoly parse(const std::string& text);
    friend bool operator==(const CyclotomicPoly&, const CyclotomicPoly&) = default;
};

/// Dimensions that should agree across all k of one eigenvalue order do not.
class GaloisViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AlexanderResult {
    CyclotomicPoly poly;
    std::string confidence;  // "certified" or "conjectural"
    std::string note;
};

struct TopComputabilityCert;

/// Delta^n from the eigenspace dimensions; exponent of Phi_e is the common
/// value of eigen_dims over k with d / gcd(d, k) = e. Certified when certs
/// certify every k, conjectural otherwise.
AlexanderResult alexander_top(const E2Page& page, const std::vector<TopComputabilityCert>& certs = {});

/// Delta^1 of a plane curve from the H^1 row: m(1) = E_d and
/// m(lambda_k) = E_k + E_{d-k} for 1 <= k < d.
AlexanderResult alexander_curve(const std::vector<Cell>& h1, int d);

struct SectionAlexander {
    AlexanderResult result;
    GenericSection section;
};

/// Delta^1 of a surface through a random plane section (a plane curve with
/// the same Delta^1 when the plane is generic).
SectionAlexander alexander_h1_by_section(const Poly& f, const PageOptions& options);

/// Solves prod_j (Delta^j)^{(-1)^j} = (t^d - 1)^chi for the one missing
/// entry of deltas (indices 0..n). Throws std::invalid_argument unless
/// exactly one entry is missing or when the solution has a negative exponent.
CyclotomicPoly euler_solve(const std::vector<std::optional<CyclotomicPoly>>& deltas, std::int64_t chi, int d);

struct ExternalData {
    std::optional<std::int64_t> bn;                  // b_n(F)
    std::map<int, std::int64_t> eig;                 // k -> dim H^n(F)_lambda
    std::vector<int> nonresonant;                    // k declared non-resonant
    std::optional<std::int64_t> chi;                 // Euler characteristic of the complement
    bool smooth = false;
};

struct TopComputabilityCert {
    int k = 0;            // 0: all k at once
    int m = 0;            // cohomological degree, always n here
    std::string status;   // certified, conjectural, failed
    std::string source;   // nonresonant-input, external-betti, smooth, inequality-met, none
    std::int64_t e2_sum = 0;
    std::optional<std::int64_t> external;
    std::string detail;
};

/// Compares E_2 sums with external cohomology data. An E_2 sum above the
/// external value gives status failed with a strict-inequality detail; an
/// external value above the E_2 sum is impossible and throws
/// std::invalid_argument.
std::vector<TopComputabilityCert> topcomputability_check(const E2Page& page, const ExternalData& external);

/// Coefficient of t^a in ((1 - t^(d-1)) / (1 - t))^(n+1).
std::int64_t smooth_mu(int n, int d, int a);

struct SymmetryReport {
    bool symmetric = true;
    std::vector<int> mismatches;  // Q with mult(Q) != mult(2d - Q)
};

SymmetryReport symmetry_report(const PoleSpectrum& spectrum);

}  // namespace milnor
