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
#include <span>
#include <vector>

#include <Eigen/Core>

#include "milnor/linalg/field.hpp"

namespace milnor::linalg {

/// Dense matrix of residues mod p, row-major so that each row is one
/// contiguous vector for the elimination kernels.
using ModMatrix = Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Rank over F_p. Destroys a.
std::size_t rank_in_place(ModMatrix& a, const PrimeField& field);

/// Reduced row echelon form in place; returns the pivot columns. Rows
/// [0, rank) hold the normalized pivot rows, the rest are zero.
std::vector<int> rref_in_place(ModMatrix& a, const PrimeField& field);

/// Kernel vector of an RREF matrix attached to a non-pivot column: 1 at
/// free_col, -rref(i, free_col) at pivot_cols[i].
std::vector<std::uint32_t> kernel_vector(const ModMatrix& rref, const std::vector<int>& pivot_cols, int free_col,
                                         const PrimeField& field);

/// Non-pivot columns of an RREF with the given pivots.
std::vector<int> free_columns(int cols, const std::vector<int>& pivot_cols);

/// Incrementally grown basis of a subspace of F_p^dim, kept in semi-echelon
/// form so membership is one reduction pass.
class ModEchelon {
public:
    ModEchelon(std::size_t dim, const PrimeField& field) : dim_(dim), field_(field) {}

    /// Adds v if it is independent of the current span; reports whether it was.
    bool insert(std::span<const std::uint32_t> v);
    std::size_t rank() const { return pivots_.size(); }
    std::size_t dim() const { return dim_; }

private:
    std::size_t dim_;
    PrimeField field_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

namespace detail {
/// dst[j] = (dst[j] + w * src[j]) mod p for j < n, using Shoup's precomputed
/// quotient w_shoup = floor(w * 2^32 / p).
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t w, std::uint32_t p);
}  // namespace detail

}  // namespace milnor::linalg
