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

#include <vector>

#include "milnor/linalg/sparse.hpp"
#include "milnor/monomial.hpp"
#include "milnor/poly.hpp"

namespace milnor {

/// Polynomial n-form sum_i r_i * (-1)^i dx_0 ^ .. ^ (dx_i omitted) ^ .. ^ dx_n.
/// Only the r_i are stored; the sign is part of the basis, so that
/// df ^ eta = (sum_i r_i f_i) dx_0 ^ .. ^ dx_n and d(eta) = (sum_i dr_i/dx_i) dx_0 ^ .. ^ dx_n.
/// Each dx_j counts 1 towards the grading, so coefficients have degree
/// graded_degree - n.
struct NForm {
    std::vector<Poly> coeffs;
    int graded_degree = 0;
};

/// h dx_0 ^ .. ^ dx_n with h of degree graded_degree - n - 1.
struct TopForm {
    Poly coeff;
    int graded_degree = 0;
};

/// The n-form attached to a vector (r_0..r_n) of degree-q polynomials.
/// Throws std::invalid_argument on mixed or inhomogeneous components.
NForm omega_of(std::vector<Poly> r, int q);

/// df ^ eta. The result has graded degree eta.graded_degree + deg f.
TopForm wedge_df(const Poly& f, const NForm& eta);

/// Exterior derivative of an n-form; keeps the graded degree.
TopForm ext_d(const NForm& eta);

enum class FormKind { n_form, top_form };

/// Ordered basis of a graded slice. For n-forms the basis is component-major:
/// position i * monomials().size() + j is x^m_j in component i.
class FormSliceBasis {
public:
    FormSliceBasis(FormKind kind, int graded_degree, int n);

    FormKind kind() const { return kind_; }
    int graded_degree() const { return graded_degree_; }
    int components() const { return kind_ == FormKind::n_form ? n_ + 1 : 1; }
    std::size_t size() const { return static_cast<std::size_t>(components()) * monomials_.size(); }
    bool empty() const { return size() == 0; }
    const SliceBasis& monomials() const { return monomials_; }

    int index(int component, const Monomial& m) const {
        int j = monomials_.index(m);
        return j < 0 ? -1 : component * static_cast<int>(monomials_.size()) + j;
    }

private:
    FormKind kind_;
    int graded_degree_;
    int n_;
    SliceBasis monomials_;
};

FormSliceBasis slice_basis(FormKind kind, int graded_degree, int n);

/// Accumulates matrix columns given as polynomials in one codomain slice.
class ColumnBuilder {
public:
    explicit ColumnBuilder(int rows) : rows_(rows) {}

    /// Appends a column; every monomial of p must be in basis. Rows start at
    /// row_offset. Returns the new column index.
    int add_column(const Poly& p, const SliceBasis& basis, int row_offset = 0);
    /// Adds p to an existing column.
    void add_to_column(int col, const Poly& p, const SliceBasis& basis, int row_offset = 0);
    int cols() const { return cols_; }
    linalg::SparseMat finish() const;

private:
    int rows_;
    int cols_ = 0;
    std::vector<linalg::Triplet> triplets_;
};

/// Matrix of df ^ - from the n-form slice of graded degree Q - d to the top
/// slice of graded degree Q.
linalg::SparseMat wedge_df_matrix(const Poly& f, int Q);

/// Matrix of d from the n-form slice of graded degree Q to the top slice of
/// the same degree.
linalg::SparseMat ext_d_matrix(int n, int Q);

/// Coordinates of an n-form in its slice basis.
linalg::RationalVector coordinates(const NForm& eta, const FormSliceBasis& basis);
/// Inverse of coordinates.
NForm form_from_coordinates(const linalg::RationalVector& v, const FormSliceBasis& basis);

}  // namespace milnor
