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
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/linalg/rank.hpp"
#include "milnor/poly.hpp"
#include "milnor/syzygy.hpp"

namespace milnor {

/// Which cells of the second page are computed.
///   arrangement: q in {0, 1}, Q <= 2d - 1, cell (1, d) is zero by theory
///   free_lqh:    q in {0, 1}, Q <= 2d
///   general:     q in 0..n,   Q <= (n + 1) d
///   curve:       plane curves; the general page plus the H^1 row
enum class Mode { arrangement, free_lqh, general, curve };

std::string to_string(Mode m);
/// Throws std::invalid_argument for unknown names.
Mode parse_mode(const std::string& name);

struct ModeSpec {
    Mode mode = Mode::general;
    int n = 0;
    int d = 0;
    int q_max = 0;      // q runs over 0..q_max
    int Q_max = 0;      // cells with Q = q d + k > Q_max are not computed

    /// Q_max_override replaces the mode's bound on Q when given.
    static ModeSpec make(Mode mode, int n, int d, std::optional<int> Q_max_override = std::nullopt);
    /// Cell forced to zero without computation.
    bool zero_by_theory(int q, int k) const { return mode == Mode::arrangement && q == 1 && k == d; }
    /// Degree bound for syzygy generators: phi_Q only uses degrees <= Q - n.
    int syzygy_degree_bound() const { return Q_max - n; }
};

enum class Backend { syzygy, direct, both };
std::string to_string(Backend b);
Backend parse_backend(const std::string& name);

inline const std::string kSetByTheory = "set by theory";

/// dim E_2^{n-q,q}(f)_k at Q = q d + k.
struct Cell {
    int q = 0;
    int k = 0;
    int Q = 0;
    std::int64_t dim = 0;
    std::string confidence;  // "certified", "probabilistic" or kSetByTheory
    double ms = 0;           // wall time, excluded from reproducible output
};

struct E2Page {
    int n = 0;
    int d = 0;
    ModeSpec mode;
    std::vector<Cell> cells;     // increasing Q
    /// Plane curves only: E_2^{1,0}(f)_k for k = 1..d, reported with q = 0.
    std::vector<Cell> curve_h1;

    const Cell* find(int q, int k) const;
};

/// Negative E_2 dimension, inconsistent ranks and similar bugs.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The two backends produced different ranks.
class BackendMismatch : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

/// Matrix of phi_Q: columns d(m * omega(r_j)) for each generator r_j and
/// monomial m of degree Q - d_j - n, then m * f_i for each i and monomial m of
/// degree Q - d - n; rows index the top slice of graded degree Q.
linalg::SparseMat phi_matrix(const Poly& f, const SyzygyGens& gens, int Q);

/// Matrix of (eta_1, eta_2) -> (df ^ eta_1 + d eta_2, df ^ eta_2) from
/// (n-forms of degree Q - d) x (n-forms of degree Q).
linalg::SparseMat phi2_matrix(const Poly& f, int Q);

struct RankRequest {
    linalg::RankOptions rank;
    std::uint64_t seed = 0;
    std::optional<std::string> dump_dir;
};

/// R_Q = rank phi_Q. Requires gens complete up to degree Q - n.
linalg::RankReport rank_syzygy_backend(const Poly& f, const SyzygyGens& gens, int Q, const RankRequest& req = {});

/// R_Q = kappa1 - kappa2 + dim(n-forms of degree Q - d), where kappa1 is the
/// kernel dimension of df ^ - on n-forms of degree Q and kappa2 that of
/// phi2_matrix. No syzygy generators needed.
linalg::RankReport rank_direct_backend(const Poly& f, int Q, const RankRequest& req = {});

/// C(Q - 1, n) - R_Q; throws InvariantViolation if negative.
std::int64_t e2_dim(int Q, int n, std::int64_t rank);

struct PageOptions {
    Backend backend = Backend::syzygy;
    linalg::RankOptions rank;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<int> Q_max_override;
    std::optional<std::string> dump_dir;
    /// Called once per finished cell, serialized.
    std::function<void(const Cell&)> progress;
};

/// Fills every cell of the mode. For Backend::syzygy and both, generators
/// are computed first (or taken from gens when supplied).
E2Page compute_page(const Poly& f, Mode mode, const PageOptions& options = {},
                    const SyzygyGens* gens = nullptr);

/// E_2^{1,0}(f)_k for a plane curve, k = 1..d: the kernel dimension of
/// eta -> (df ^ eta, d eta) on 2-forms of degree k.
std::vector<Cell> curve_h1_dims(const Poly& f, const PageOptions& options = {});

/// Smoothness of V(f): the Jacobian ideal contains every monomial of degree
/// (n + 1)(d - 2) + 1. Full rank modulo any prime is a proof; three failing
/// primes are taken as a verdict of singular.
bool is_smooth(const Poly& f, std::uint64_t seed = 0);

}  // namespace milnor
