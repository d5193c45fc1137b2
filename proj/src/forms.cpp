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
#include "milnor/forms.hpp"

#include <stdexcept>

namespace milnor {

NForm omega_of(std::vector<Poly> r, int q) {
    if (r.empty()) throw std::invalid_argument("omega_of needs n+1 components");
    const int nvars = r.front().nvars();
    if (static_cast<int>(r.size()) != nvars) throw std::invalid_argument("omega_of needs n+1 components");
    for (const auto& c : r) {
        if (c.nvars() != nvars) throw std::invalid_argument("components live in different rings");
        if (!c.is_zero() && c.homogeneous_degree() != q)
            throw std::invalid_argument("component is not homogeneous of the declared degree");
    }
    return {std::move(r), q + nvars - 1};
}

TopForm wedge_df(const Poly& f, const NForm& eta) {
    auto fi = partials(f);
    if (fi.size() != eta.coeffs.size()) throw std::invalid_argument("form and polynomial in different rings");
    Poly out(f.nvars());
    for (std::size_t i = 0; i < fi.size(); ++i) out += eta.coeffs[i] * fi[i];
    return {std::move(out), eta.graded_degree + f.total_degree()};
}

TopForm ext_d(const NForm& eta) {
    Poly out(static_cast<int>(eta.coeffs.size()));
    for (std::size_t i = 0; i < eta.coeffs.size(); ++i) out += eta.coeffs[i].derivative(static_cast<int>(i));
    return {std::move(out), eta.graded_degree};
}

FormSliceBasis::FormSliceBasis(FormKind kind, int graded_degree, int n)
    : kind_(kind),
      graded_degree_(graded_degree),
      n_(n),
      monomials_(kind == FormKind::n_form ? graded_degree - n : graded_degree - n - 1, n) {}

FormSliceBasis slice_basis(FormKind kind, int graded_degree, int n) {
    return FormSliceBasis(kind, graded_degree, n);
}

int ColumnBuilder::add_column(const Poly& p, const SliceBasis& basis, int row_offset) {
    int col = cols_++;
    add_to_column(col, p, basis, row_offset);
    return col;
}

void ColumnBuilder::add_to_column(int col, const Poly& p, const SliceBasis& basis, int row_offset) {
    for (const auto& t : p.terms()) {
        int row = basis.index(t.mono);
        if (row < 0) throw std::logic_error("column polynomial outside its codomain slice");
        triplets_.emplace_back(row_offset + row, col, t.coeff);
    }
}

linalg::SparseMat ColumnBuilder::finish() const {
    return linalg::make_sparse(rows_, cols_, triplets_);
}

linalg::SparseMat wedge_df_matrix(const Poly& f, int Q) {
    const int n = f.n();
    const int d = f.total_degree();
    FormSliceBasis domain(FormKind::n_form, Q - d, n);
    FormSliceBasis codomain(FormKind::top_form, Q, n);
    auto fi = partials(f);
    ColumnBuilder b(static_cast<int>(codomain.size()));
    for (int i = 0; i <= n; ++i)
        for (const auto& m : domain.monomials().monomials())
            b.add_column(fi[static_cast<std::size_t>(i)].times(m), codomain.monomials());
    return b.finish();
}

linalg::SparseMat ext_d_matrix(int n, int Q) {
    FormSliceBasis domain(FormKind::n_form, Q, n);
    FormSliceBasis codomain(FormKind::top_form, Q, n);
    ColumnBuilder b(static_cast<int>(codomain.size()));
    for (int i = 0; i <= n; ++i)
        for (const auto& m : domain.monomials().monomials())
            b.add_column(Poly::monomial(n + 1, m).derivative(i), codomain.monomials());
    return b.finish();
}

linalg::RationalVector coordinates(const NForm& eta, const FormSliceBasis& basis) {
    linalg::RationalVector v = linalg::RationalVector::Constant(static_cast<Eigen::Index>(basis.size()), Rational(0));
    for (std::size_t i = 0; i < eta.coeffs.size(); ++i)
        for (const auto& t : eta.coeffs[i].terms()) {
            int k = basis.index(static_cast<int>(i), t.mono);
            if (k < 0) throw std::invalid_argument("form does not lie in the slice");
            v[k] = t.coeff;
        }
    return v;
}

NForm form_from_coordinates(const linalg::RationalVector& v, const FormSliceBasis& basis) {
    const int nvars = basis.monomials().n() + 1;
    const auto width = static_cast<Eigen::Index>(basis.monomials().size());
    NForm eta{std::vector<Poly>(static_cast<std::size_t>(basis.components()), Poly(nvars)), basis.graded_degree()};
    for (int i = 0; i < basis.components(); ++i) {
        std::vector<Term> terms;
        for (Eigen::Index j = 0; j < width; ++j) {
            const Rational& c = v[i * width + j];
            if (c != 0) terms.push_back({basis.monomials()[static_cast<std::size_t>(j)], c});
        }
        eta.coeffs[static_cast<std::size_t>(i)] = Poly(nvars, std::move(terms));
    }
    return eta;
}

}  // namespace milnor
