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
#include "milnor/linalg/sparse.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace milnor::linalg {

SparseMat make_sparse(int rows, int cols, const std::vector<Triplet>& triplets) {
    SparseMat m(rows, cols);
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.prune([](int, int, const Rational& v) { return v != 0; });
    m.makeCompressed();
    return m;
}

std::optional<ModMatrix> reduce_mod(const SparseMat& m, const PrimeField& field) {
    ModMatrix out = ModMatrix::Zero(m.rows(), m.cols());
    for (int r = 0; r < m.outerSize(); ++r) {
        for (SparseMat::InnerIterator it(m, r); it; ++it) {
            auto v = field.from_rational(it.value());
            if (!v) return std::nullopt;
            out(it.row(), it.col()) = *v;
        }
    }
    return out;
}

void write_triplets(std::ostream& out, const SparseMat& m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonZeros() << '\n';
    for (int r = 0; r < m.outerSize(); ++r) {
        for (SparseMat::InnerIterator it(m, r); it; ++it)
            out << it.row() << ' ' << it.col() << ' ' << numerator(it.value()) << '/' << denominator(it.value())
                << '\n';
    }
}

SparseMat read_triplets(std::istream& in) {
    long rows = -1, cols = -1, nnz = -1;
    if (!(in >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
        throw std::runtime_error("bad triplet header");
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(nnz));
    for (long k = 0; k < nnz; ++k) {
        long r, c;
        std::string value;
        if (!(in >> r >> c >> value)) throw std::runtime_error("truncated triplet list");
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::runtime_error("triplet index out of range");
        try {
            t.emplace_back(static_cast<int>(r), static_cast<int>(c), parse_rational(value));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(e.what());
        }
    }
    return make_sparse(static_cast<int>(rows), static_cast<int>(cols), t);
}

RationalVector multiply(const SparseMat& m, const RationalVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch in multiply");
    RationalVector out = RationalVector::Constant(m.rows(), Rational(0));
    for (int r = 0; r < m.outerSize(); ++r) {
        Rational acc = 0;
        for (SparseMat::InnerIterator it(m, r); it; ++it)
            if (v[it.col()] != 0) acc += it.value() * v[it.col()];
        out[r] = std::move(acc);
    }
    return out;
}

}  // namespace milnor::linalg
