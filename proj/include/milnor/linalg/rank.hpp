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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/linalg/sparse.hpp"

namespace milnor::linalg {

enum class Confidence { certified, probabilistic };

std::string to_string(Confidence c);
/// The weaker of two tags.
Confidence weakest(Confidence a, Confidence b);

struct RankReport {
    std::size_t rank = 0;
    bool exact = false;                  // false: modular
    std::vector<std::uint32_t> primes;   // primes used, empty when exact
    Confidence confidence = Confidence::certified;
};

/// Raised when modular ranks keep disagreeing and exact fallback is off.
class RankDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank as the maximum over prime_count random primes in (2^30, 2^31).
/// One extra prime is drawn on disagreement; if the maximum is still seen
/// only once, RankDisagreement is thrown. Full rank and the zero matrix are
/// certified, anything else is probabilistic.
RankReport rank_modular(const SparseMat& m, int prime_count, std::uint64_t seed);

/// Fraction-free elimination over Z with sparsest-column pivoting.
RankReport rank_exact(const SparseMat& m);

struct RankOptions {
    int prime_count = 2;
    bool exact = false;
    bool exact_fallback = true;
};

/// rank_exact when options.exact, otherwise rank_modular with exact fallback
/// on persistent disagreement.
RankReport compute_rank(const SparseMat& m, const RankOptions& options, std::uint64_t seed);

/// Reduced row echelon form over Q; returns pivot columns.
std::vector<int> rref_exact(Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>& a);

enum class KernelMethod { modular, exact };

/// The kernel vector attached to each requested non-pivot column of the RREF
/// of m: 1 at that column, 0 at the other non-pivot columns. Modular mode
/// lifts from several primes by CRT and rational reconstruction and checks
/// m*v = 0 exactly; it returns nullopt if a requested column turns out to be
/// a pivot over Q or lifting does not converge within max_primes.
std::optional<std::vector<RationalVector>> lift_kernel_vectors(const SparseMat& m, std::span<const int> free_cols,
                                                              std::mt19937_64& rng, int max_primes = 64);

/// Same vectors computed by exact rational elimination.
std::vector<RationalVector> exact_kernel_vectors(const SparseMat& m, std::span<const int> free_cols);

/// A kernel basis. Every vector satisfies m*v = 0 exactly; the modular path
/// falls back to exact elimination if lifting fails.
std::vector<RationalVector> kernel_basis(const SparseMat& m, KernelMethod method, std::uint64_t seed = 0);

}  // namespace milnor::linalg
