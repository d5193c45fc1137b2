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
#include "milnor/linalg/rank.hpp"

#include <algorithm>
#include <utility>

#include "milnor/linalg/reconstruct.hpp"

namespace milnor::linalg {

std::string to_string(Confidence c) {
    return c == Confidence::certified ? "certified" : "probabilistic";
}

Confidence weakest(Confidence a, Confidence b) {
    return a == Confidence::probabilistic || b == Confidence::probabilistic ? Confidence::probabilistic
                                                                             : Confidence::certified;
}

RankReport rank_modular(const SparseMat& m, int prime_count, std::uint64_t seed) {
    RankReport rep;
    if (m.nonZeros() == 0) return rep;
    const auto full = static_cast<std::size_t>(std::min(m.rows(), m.cols()));
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> ranks;
    auto run_one = [&] {
        for (;;) {
            std::uint32_t p = random_prime(rng);
            PrimeField field(p);
            auto a = reduce_mod(m, field);
            if (!a) continue;  // p divides a denominator
            ranks.push_back(rank_in_place(*a, field));
            rep.primes.push_back(p);
            return;
        }
    };
    auto best = [&] { return *std::max_element(ranks.begin(), ranks.end()); };
    for (int i = 0; i < std::max(prime_count, 1); ++i) {
        run_one();
        if (ranks.back() == full) break;  // rank mod p never exceeds the rank over Q
    }
    rep.rank = best();
    if (rep.rank == full) {
        rep.confidence = Confidence::certified;
        return rep;
    }
    rep.confidence = Confidence::probabilistic;
    if (ranks.size() < 2) return rep;
    auto seen = [&] { return std::count(ranks.begin(), ranks.end(), best()); };
    if (seen() >= 2) return rep;
    run_one();
    rep.rank = best();
    if (rep.rank == full) {
        rep.confidence = Confidence::certified;
        return rep;
    }
    if (seen() < 2) throw RankDisagreement("modular ranks disagree across primes");
    return rep;
}

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

std::vector<IntRow> integer_rows(const SparseMat& m) {
    std::vector<IntRow> rows(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.outerSize(); ++r) {
        Integer l = 1;
        for (SparseMat::InnerIterator it(m, r); it; ++it) l = lcm(l, denominator(it.value()));
        for (SparseMat::InnerIterator it(m, r); it; ++it)
            rows[static_cast<std::size_t>(r)].emplace_back(
                it.col(), numerator(it.value()) * (l / denominator(it.value())));
    }
    return rows;
}

const Integer* find_entry(const IntRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
}

// a*r - b*p with the content divided out
IntRow combine(const IntRow& r, const Integer& a, const IntRow& p, const Integer& b) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            Integer v = a * r[i].second - b * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    Integer g = 0;
    for (const auto& e : out) {
        g = gcd(g, e.second);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& e : out) e.second /= g;
    return out;
}

}  // namespace

RankReport rank_exact(const SparseMat& m) {
    RankReport rep;
    rep.exact = true;
    rep.confidence = Confidence::certified;
    auto rows = integer_rows(m);
    std::vector<char> active(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) active[i] = !rows[i].empty();
    std::vector<int> count(static_cast<std::size_t>(m.cols()));
    for (;;) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (active[i])
                for (const auto& e : rows[i]) ++count[static_cast<std::size_t>(e.first)];
        int col = -1;
        for (std::size_t c = 0; c < count.size(); ++c)
            if (count[c] > 0 && (col < 0 || count[c] < count[static_cast<std::size_t>(col)])) col = static_cast<int>(c);
        if (col < 0) break;
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (active[i] && find_entry(rows[i], col) && (piv == rows.size() || rows[i].size() < rows[piv].size()))
                piv = i;
        const Integer a = *find_entry(rows[piv], col);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || i == piv) continue;
            const Integer* b = find_entry(rows[i], col);
            if (!b) continue;
            rows[i] = combine(rows[i], a, rows[piv], Integer(*b));
            if (rows[i].empty()) active[i] = 0;
        }
        active[piv] = 0;
        ++rep.rank;
    }
    return rep;
}

RankReport compute_rank(const SparseMat& m, const RankOptions& options, std::uint64_t seed) {
    if (options.exact) return rank_exact(m);
    try {
        return rank_modular(m, options.prime_count, seed);
    } catch (const RankDisagreement&) {
        if (!options.exact_fallback) throw;
        return rank_exact(m);
    }
}

std::vector<int> rref_exact(Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>& a) {
    std::vector<int> pivots;
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
        Eigen::Index piv = rank;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != rank) a.row(piv).swap(a.row(rank));
        const Rational inv = 1 / a(rank, c);
        for (Eigen::Index j = c; j < a.cols(); ++j)
            if (a(rank, j) != 0) a(rank, j) *= inv;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == rank || a(r, c) == 0) continue;
            const Rational s = a(r, c);
            for (Eigen::Index j = c; j < a.cols(); ++j)
                if (a(rank, j) != 0) a(r, j) -= s * a(rank, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++rank;
    }
    return pivots;
}

namespace {

bool in_kernel(const SparseMat& m, const RationalVector& v) {
    RationalVector image = multiply(m, v);
    return std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; });
}

// RREF pivot sets over F_p are lexicographically no smaller than over Q, and
// never longer.
bool better_pivots(const std::vector<int>& cand, const std::vector<int>& ref) {
    if (cand.size() != ref.size()) return cand.size() > ref.size();
    return cand < ref;
}

}  // namespace

std::optional<std::vector<RationalVector>> lift_kernel_vectors(const SparseMat& m, std::span<const int> free_cols,
                                                              std::mt19937_64& rng, int max_primes) {
    const auto ncols = static_cast<std::size_t>(m.cols());
    if (free_cols.empty()) return std::vector<RationalVector>{};
    std::vector<int> ref;
    bool have_ref = false;
    Integer modulus = 1;
    std::vector<std::vector<Integer>> acc;
    for (int used = 0; used < max_primes;) {
        const std::uint32_t p = random_prime(rng);
        PrimeField field(p);
        auto a = reduce_mod(m, field);
        if (!a) continue;
        ++used;
        auto piv = rref_in_place(*a, field);
        if (!have_ref || better_pivots(piv, ref)) {
            ref = std::move(piv);
            have_ref = true;
            for (int c : free_cols)
                if (std::binary_search(ref.begin(), ref.end(), c)) return std::nullopt;
            modulus = 1;
            acc.assign(free_cols.size(), std::vector<Integer>(ncols, Integer(0)));
        } else if (piv != ref) {
            continue;  // unlucky prime
        }
        for (std::size_t i = 0; i < free_cols.size(); ++i) {
            auto kv = kernel_vector(*a, ref, free_cols[i], field);
            for (std::size_t e = 0; e < ncols; ++e) acc[i][e] = crt_combine(acc[i][e], modulus, kv[e], p);
        }
        modulus *= p;

        std::vector<RationalVector> out;
        bool ok = true;
        for (std::size_t i = 0; i < free_cols.size() && ok; ++i) {
            RationalVector v(static_cast<Eigen::Index>(ncols));
            for (std::size_t e = 0; e < ncols && ok; ++e) {
                if (acc[i][e] == 0) {
                    v[static_cast<Eigen::Index>(e)] = 0;
                    continue;
                }
                auto q = rational_reconstruct(acc[i][e], modulus);
                if (!q) ok = false;
                else v[static_cast<Eigen::Index>(e)] = *q;
            }
            if (ok) ok = in_kernel(m, v);
            if (ok) out.push_back(std::move(v));
        }
        if (ok) return out;
    }
    return std::nullopt;
}

std::vector<RationalVector> exact_kernel_vectors(const SparseMat& m, std::span<const int> free_cols) {
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> a(m);
    auto piv = rref_exact(a);
    std::vector<RationalVector> out;
    for (int c : free_cols) {
        if (std::binary_search(piv.begin(), piv.end(), c))
            throw std::invalid_argument("requested kernel column is a pivot column");
        RationalVector v = RationalVector::Constant(m.cols(), Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a(static_cast<Eigen::Index>(i), c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<RationalVector> kernel_basis(const SparseMat& m, KernelMethod method, std::uint64_t seed) {
    if (method == KernelMethod::modular) {
        std::mt19937_64 rng(seed);
        for (int attempt = 0; attempt < 3; ++attempt) {
            std::uint32_t p = random_prime(rng);
            PrimeField field(p);
            auto a = reduce_mod(m, field);
            if (!a) continue;
            auto free = free_columns(static_cast<int>(m.cols()), rref_in_place(*a, field));
            if (auto lifted = lift_kernel_vectors(m, free, rng)) return *lifted;
        }
    }
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> a(m);
    auto free = free_columns(static_cast<int>(m.cols()), rref_exact(a));
    return exact_kernel_vectors(m, free);
}

}  // namespace milnor::linalg
