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
#include "milnor/syzygy.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "milnor/forms.hpp"
#include "milnor/linalg/modular.hpp"

namespace milnor {

std::vector<int> SyzygyGens::degrees() const {
    std::vector<int> out;
    for (const auto& g : gens) out.push_back(g.degree);
    return out;
}

bool is_syzygy(const Poly& f, const std::vector<Poly>& r) {
    auto fi = partials(f);
    if (r.size() != fi.size()) return false;
    Poly sum(f.nvars());
    for (std::size_t i = 0; i < r.size(); ++i) sum += r[i] * fi[i];
    return sum.is_zero();
}

namespace {

// Kernel vector -> syzygy with coprime integer coefficients.
Syzygy to_syzygy(const linalg::RationalVector& v, const FormSliceBasis& basis, int q) {
    Integer l = 1;
    for (const auto& c : v)
        if (c != 0) l = lcm(l, denominator(c));
    Integer g = 0;
    for (const auto& c : v)
        if (c != 0) g = gcd(g, numerator(c) * (l / denominator(c)));
    linalg::RationalVector w = v * Rational(l, g == 0 ? Integer(1) : g);
    return {form_from_coordinates(w, basis).coeffs, q};
}

std::vector<std::uint32_t> coordinates_mod(const std::vector<Poly>& r, const FormSliceBasis& basis,
                                           const linalg::PrimeField& field) {
    std::vector<std::uint32_t> out(basis.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (const auto& t : r[i].terms()) {
            auto c = field.from_rational(t.coeff);
            if (!c) throw std::domain_error("prime divides a generator denominator");
            out[static_cast<std::size_t>(basis.index(static_cast<int>(i), t.mono))] = *c;
        }
    return out;
}

void check_input(const Poly& f) {
    auto d = f.homogeneous_degree();
    if (!d || *d < 1) throw std::invalid_argument("expected a homogeneous polynomial of positive degree");
}

}  // namespace

std::vector<Syzygy> ar_slice(const Poly& f, int q, const SyzygyOptions& options) {
    check_input(f);
    const int n = f.n(), d = f.total_degree();
    if (q < 0) return {};
    FormSliceBasis domain(FormKind::n_form, q + n, n);
    linalg::SparseMat a = wedge_df_matrix(f, q + n + d);
    std::vector<Syzygy> out;
    for (const auto& v : linalg::kernel_basis(a, options.method, options.seed ^ static_cast<std::uint64_t>(q)))
        out.push_back(to_syzygy(v, domain, q));
    return out;
}

SyzygyGens minimal_generators(const Poly& f, int D, const SyzygyOptions& options) {
    check_input(f);
    const int n = f.n(), d = f.total_degree();
    SyzygyGens out;
    std::mt19937_64 rng(options.seed);
    for (int q = 0; q <= D; ++q) {
        FormSliceBasis domain(FormKind::n_form, q + n, n);
        linalg::SparseMat a = wedge_df_matrix(f, q + n + d);
        const int cols = static_cast<int>(a.cols());
        std::vector<int> free;
        std::vector<std::vector<std::uint32_t>> kernel_mod;
        std::optional<linalg::PrimeField> field;
        std::vector<linalg::RationalVector> exact_kernel;
        if (options.method == linalg::KernelMethod::exact) {
            Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> dense(a);
            free = linalg::free_columns(cols, linalg::rref_exact(dense));
            exact_kernel = linalg::exact_kernel_vectors(a, free);
            // the membership tests below still run mod p
        }
        for (;;) {
            field.emplace(linalg::random_prime(rng));
            auto m = linalg::reduce_mod(a, *field);
            if (!m) continue;
            if (options.method == linalg::KernelMethod::modular) {
                auto piv = linalg::rref_in_place(*m, *field);
                free = linalg::free_columns(cols, piv);
                for (int c : free) kernel_mod.push_back(linalg::kernel_vector(*m, piv, c, *field));
            } else {
                bool ok = true;
                for (const auto& v : exact_kernel) {
                    std::vector<std::uint32_t> w(static_cast<std::size_t>(cols));
                    for (int j = 0; j < cols && ok; ++j) {
                        auto c = field->from_rational(v[j]);
                        ok = c.has_value();
                        if (ok) w[static_cast<std::size_t>(j)] = *c;
                    }
                    kernel_mod.push_back(std::move(w));
                }
                if (!ok) {
                    kernel_mod.clear();
                    continue;
                }
            }
            break;
        }
        const std::size_t dim_ar = free.size();
        if (dim_ar == 0) continue;

        linalg::ModEchelon span(static_cast<std::size_t>(cols), *field);
        for (const auto& g : out.gens) {
            if (span.rank() == dim_ar) break;
            SliceBasis shifts(q - g.degree, n);
            for (const auto& mono : shifts.monomials()) {
                std::vector<Poly> shifted;
                for (const auto& c : g.r) shifted.push_back(c.times(mono));
                span.insert(coordinates_mod(shifted, domain, *field));
                if (span.rank() == dim_ar) break;
            }
        }
        std::vector<int> chosen;  // positions into free
        for (std::size_t i = 0; i < free.size() && span.rank() < dim_ar; ++i)
            if (span.insert(kernel_mod[i])) chosen.push_back(static_cast<int>(i));
        if (span.rank() != dim_ar) throw std::logic_error("syzygy span exceeds the kernel dimension");

        std::vector<linalg::RationalVector> vectors;
        if (options.method == linalg::KernelMethod::exact) {
            for (int i : chosen) vectors.push_back(exact_kernel[static_cast<std::size_t>(i)]);
        } else if (!chosen.empty()) {
            std::vector<int> cols_wanted;
            for (int i : chosen) cols_wanted.push_back(free[static_cast<std::size_t>(i)]);
            auto lifted = linalg::lift_kernel_vectors(a, cols_wanted, rng);
            vectors = lifted ? std::move(*lifted) : linalg::exact_kernel_vectors(a, cols_wanted);
        }
        for (const auto& v : vectors) {
            Syzygy s = to_syzygy(v, domain, q);
            if (!is_syzygy(f, s.r)) throw std::logic_error("lifted syzygy fails verification");
            out.gens.push_back(std::move(s));
        }
        out.degree_bound = q;

        if (options.stop_when_free && static_cast<int>(out.gens.size()) == n) {
            auto degs = out.degrees();
            if (std::accumulate(degs.begin(), degs.end(), 0) == d - 1 && saito_check(f, out).is_free) {
                out.generates_module = true;
                return out;
            }
        }
    }
    out.degree_bound = D;
    return out;
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
    const std::size_t k = m.size();
    if (k == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("matrix is not square");
    const int nvars = m[0][0].nvars();
    if (k == 1) return m[0][0];
    if (k <= 4) {
        // expansion along the first row
        Poly det(nvars);
        for (std::size_t j = 0; j < k; ++j) {
            if (m[0][j].is_zero()) continue;
            std::vector<std::vector<Poly>> minor;
            for (std::size_t i = 1; i < k; ++i) {
                std::vector<Poly> row;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(m[i][c]);
                minor.push_back(std::move(row));
            }
            Poly term = m[0][j] * determinant(minor);
            if (j % 2) det -= term;
            else det += term;
        }
        return det;
    }
    // Bareiss: every division below is exact
    auto a = m;
    Poly prev(nvars, Rational(1));
    int sign = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a[p][p].is_zero()) {
            std::size_t r = p + 1;
            while (r < k && a[r][p].is_zero()) ++r;
            if (r == k) return Poly(nvars);
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i)
            for (std::size_t j = p + 1; j < k; ++j)
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]).exact_divide(prev);
        prev = a[p][p];
    }
    return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

FreenessReport saito_check(const Poly& f, const SyzygyGens& gens) {
    check_input(f);
    const int n = f.n();
    FreenessReport rep;
    rep.determinant_scale = 0;
    if (static_cast<int>(gens.gens.size()) != n) {
        rep.reason = "not free: " + std::to_string(gens.gens.size()) + " generators, expected " + std::to_string(n);
        return rep;
    }
    std::vector<std::vector<Poly>> m;
    std::vector<Poly> euler;
    for (int i = 0; i <= n; ++i) euler.push_back(Poly::variable(n + 1, i));
    m.push_back(std::move(euler));
    for (const auto& g : gens.gens) m.push_back(g.r);
    Poly det = determinant(m);
    if (det.is_zero()) {
        rep.reason = "not free: determinant vanishes";
        return rep;
    }
    const Rational lead = f.coefficient(det.leading().mono);
    const Rational c = lead == 0 ? Rational(0) : det.leading().coeff / lead;
    if (lead == 0 || det != f * c) {
        rep.reason = "not free: determinant is not a multiple of f";
        return rep;
    }
    rep.is_free = true;
    rep.exponents = gens.degrees();
    rep.determinant_scale = c;
    rep.reason = "free";
    return rep;
}

PoincareData poincare_free(const std::vector<int>& exponents) {
    PoincareData out;
    out.coefficients = {Integer(1)};
    for (int e : exponents) {
        std::vector<Integer> next(out.coefficients.size() + 1, Integer(0));
        for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
            next[i] += out.coefficients[i];
            next[i + 1] += out.coefficients[i] * e;
        }
        out.coefficients = std::move(next);
    }
    out.chi = 1;
    for (int e : exponents) out.chi *= (1 - e);
    return out;
}

}  // namespace milnor
