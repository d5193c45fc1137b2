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
#include "milnor/linalg/modular.hpp"

#include <algorithm>
#include <utility>

namespace milnor::linalg {

namespace detail {

void axpy_mod(std::uint32_t* __restrict dst, const std::uint32_t* __restrict src, std::size_t n, std::uint32_t w,
              std::uint32_t p) {
    const auto w_shoup = static_cast<std::uint32_t>((static_cast<std::uint64_t>(w) << 32) / p);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t x = src[j];
        auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * w_shoup) >> 32);
        std::uint32_t r = x * w - q * p;  // exact product mod 2^32, lies in [0, 2p)
        r = r >= p ? r - p : r;
        std::uint32_t s = dst[j] + r;
        dst[j] = s >= p ? s - p : s;
    }
}

}  // namespace detail

namespace {

// Last nonzero position in [from, n), or from - 1 if none.
std::ptrdiff_t last_nonzero(const std::uint32_t* row, std::size_t from, std::size_t n) {
    for (std::size_t j = n; j > from; --j)
        if (row[j - 1]) return static_cast<std::ptrdiff_t>(j - 1);
    return static_cast<std::ptrdiff_t>(from) - 1;
}

std::vector<std::uint32_t*> row_pointers(ModMatrix& a) {
    std::vector<std::uint32_t*> rows(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) rows[static_cast<std::size_t>(i)] = a.data() + i * a.cols();
    return rows;
}

void scale_row(std::uint32_t* row, std::size_t from, std::size_t to, std::uint32_t s, const PrimeField& f) {
    for (std::size_t j = from; j < to; ++j) row[j] = f.mul(row[j], s);
}

}  // namespace

std::size_t rank_in_place(ModMatrix& a, const PrimeField& field) {
    const auto nrows = static_cast<std::size_t>(a.rows());
    const auto ncols = static_cast<std::size_t>(a.cols());
    const std::uint32_t p = field.modulus();
    auto rows = row_pointers(a);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t piv = rank;
        while (piv < nrows && rows[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(rows[rank], rows[piv]);
        std::uint32_t* prow = rows[rank];
        const std::uint32_t inv = field.inv(prow[c]);
        const std::ptrdiff_t last = last_nonzero(prow, c + 1, ncols);
        const std::size_t len = last >= static_cast<std::ptrdiff_t>(c + 1) ? static_cast<std::size_t>(last) - c : 0;
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            std::uint32_t v = rows[r][c];
            if (v == 0) continue;
            rows[r][c] = 0;
            if (len) detail::axpy_mod(rows[r] + c + 1, prow + c + 1, len, field.neg(field.mul(v, inv)), p);
        }
        ++rank;
    }
    return rank;
}

std::vector<int> rref_in_place(ModMatrix& a, const PrimeField& field) {
    const auto nrows = static_cast<std::size_t>(a.rows());
    const auto ncols = static_cast<std::size_t>(a.cols());
    const std::uint32_t p = field.modulus();
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t piv = rank;
        while (piv < nrows && a(static_cast<Eigen::Index>(piv), static_cast<Eigen::Index>(c)) == 0) ++piv;
        if (piv == nrows) continue;
        if (piv != rank) a.row(static_cast<Eigen::Index>(piv)).swap(a.row(static_cast<Eigen::Index>(rank)));
        std::uint32_t* prow = a.data() + rank * ncols;
        scale_row(prow, c, ncols, field.inv(prow[c]), field);
        const std::ptrdiff_t last = last_nonzero(prow, c + 1, ncols);
        const std::size_t len = last >= static_cast<std::ptrdiff_t>(c + 1) ? static_cast<std::size_t>(last) - c : 0;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            std::uint32_t* row = a.data() + r * ncols;
            std::uint32_t v = row[c];
            if (v == 0) continue;
            row[c] = 0;
            if (len) detail::axpy_mod(row + c + 1, prow + c + 1, len, field.neg(v), p);
        }
        pivots.push_back(static_cast<int>(c));
        ++rank;
    }
    return pivots;
}

std::vector<int> free_columns(int cols, const std::vector<int>& pivot_cols) {
    std::vector<int> out;
    std::size_t k = 0;
    for (int c = 0; c < cols; ++c) {
        if (k < pivot_cols.size() && pivot_cols[k] == c)
            ++k;
        else
            out.push_back(c);
    }
    return out;
}

std::vector<std::uint32_t> kernel_vector(const ModMatrix& rref, const std::vector<int>& pivot_cols, int free_col,
                                         const PrimeField& field) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(rref.cols()), 0);
    v[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        v[static_cast<std::size_t>(pivot_cols[i])] = field.neg(rref(static_cast<Eigen::Index>(i), free_col));
    return v;
}

bool ModEchelon::insert(std::span<const std::uint32_t> v) {
    std::vector<std::uint32_t> w(v.begin(), v.end());
    const std::uint32_t p = field_.modulus();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t c = pivots_[k];
        if (w[c] == 0) continue;
        // basis rows are normalized, so subtracting w[c] times the row clears w[c]
        detail::axpy_mod(w.data() + c, rows_[k].data() + c, dim_ - c, field_.neg(w[c]), p);
    }
    auto it = std::find_if(w.begin(), w.end(), [](std::uint32_t x) { return x != 0; });
    if (it == w.end()) return false;
    auto c = static_cast<std::size_t>(it - w.begin());
    scale_row(w.data(), c, dim_, field_.inv(w[c]), field_);
    rows_.push_back(std::move(w));
    pivots_.push_back(c);
    return true;
}

}  // namespace milnor::linalg
