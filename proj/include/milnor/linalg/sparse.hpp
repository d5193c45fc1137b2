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

#include <iosfwd>
#include <optional>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/SparseCore>

#include "milnor/linalg/field.hpp"
#include "milnor/linalg/modular.hpp"
#include "milnor/rational.hpp"

namespace milnor::linalg {

/// Exact sparse matrix over Q. Row-major: elimination works row by row.
using SparseMat = Eigen::SparseMatrix<Rational, Eigen::RowMajor, int>;
using Triplet = Eigen::Triplet<Rational, int>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Sums duplicate positions and drops entries that cancel to zero.
SparseMat make_sparse(int rows, int cols, const std::vector<Triplet>& triplets);

/// Dense image mod p; nullopt when p divides some denominator.
std::optional<ModMatrix> reduce_mod(const SparseMat& m, const PrimeField& field);

/// Text form: header "rows cols nnz", then one "row col num/den" line per
/// stored entry in row-major order.
void write_triplets(std::ostream& out, const SparseMat& m);
/// Inverse of write_triplets. Throws std::runtime_error on malformed input.
SparseMat read_triplets(std::istream& in);

/// m * v computed exactly.
RationalVector multiply(const SparseMat& m, const RationalVector& v);

}  // namespace milnor::linalg
