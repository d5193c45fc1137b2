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
#include "milnor/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "milnor/forms.hpp"
#include "milnor/linalg/modular.hpp"

namespace milnor {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::arrangement: return "arrangement";
        case Mode::free_lqh: return "free_lqh";
        case Mode::general: return "general";
        case Mode::curve: return "curve";
    }
    return "?";
}

Mode parse_mode(const std::string& name) {
    for (Mode m : {Mode::arrangement, Mode::free_lqh, Mode::general, Mode::curve})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown mode: " + name);
}

std::string to_string(Backend b) {
    switch (b) {
        case Backend::syzygy: return "syzygy";
        case Backend::direct: return "direct";
        case Backend::both: return "both";
    }
    return "?";
}

Backend parse_backend(const std::string& name) {
    for (Backend b : {Backend::syzygy, Backend::direct, Backend::both})
        if (to_string(b) == name) return b;
    throw std::invalid_argument("unknown backend: " + name);
}

ModeSpec ModeSpec::make(Mode mode, int n, int d, std::optional<int> Q_max_override) {
    if (mode == Mode::curve && n != 2) throw std::invalid_argument("curve mode needs three variables");
    ModeSpec s;
    s.mode = mode;
    s.n = n;
    s.d = d;
    switch (mode) {
        case Mode::arrangement:
            s.q_max = 1;
            s.Q_max = 2 * d - 1;
            break;
        case Mode::free_lqh:
            s.q_max = 1;
            s.Q_max = 2 * d;
            break;
        case Mode::general:
        case Mode::curve:
            s.q_max = n;
            s.Q_max = (n + 1) * d;
            break;
    }
    if (Q_max_override) s.Q_max = *Q_max_override;
    return s;
}

const Cell* E2Page::find(int q, int k) const {
    for (const auto& c : cells)
        if (c.q == q && c.k == k) return &c;
    return nullptr;
}

namespace {

void append_block(std::vector<linalg::Triplet>& out, const linalg::SparseMat& m, int row_offset, int col_offset) {
    for (int r = 0; r < m.outerSize(); ++r)
        for (linalg::SparseMat::InnerIterator it(m, r); it; ++it)
            out.emplace_back(it.row() + row_offset, it.col() + col_offset, it.value());
}

void dump(const std::optional<std::string>& dir, const std::string& name, const linalg::SparseMat& m) {
    if (!dir) return;
    std::filesystem::create_directories(*dir);
    std::ofstream out(std::filesystem::path(*dir) / name);
    if (!out) throw std::runtime_error("cannot write matrix dump " + name);
    linalg::write_triplets(out, m);
}

linalg::RankReport rank_of(const linalg::SparseMat& m, const RankRequest& req, std::uint64_t salt) {
    return linalg::compute_rank(m, req.rank, req.seed * 0x9E3779B97F4A7C15ull + salt);
}

std::int64_t kernel_dim(const linalg::SparseMat& m, const linalg::RankReport& r) {
    return static_cast<std::int64_t>(m.cols()) - static_cast<std::int64_t>(r.rank);
}

linalg::RankReport merge(const linalg::RankReport& a, const linalg::RankReport& b, std::size_t rank) {
    linalg::RankReport out;
    out.rank = rank;
    out.exact = a.exact && b.exact;
    out.primes = a.primes;
    out.primes.insert(out.primes.end(), b.primes.begin(), b.primes.end());
    out.confidence = linalg::weakest(a.confidence, b.confidence);
    return out;
}

}  // namespace

linalg::SparseMat phi_matrix(const Poly& f, const SyzygyGens& gens, int Q) {
    const int n = f.n();
    const int d = f.total_degree();
    FormSliceBasis codomain(FormKind::top_form, Q, n);
    const SliceBasis& rows = codomain.monomials();
    ColumnBuilder b(static_cast<int>(codomain.size()));
    if (codomain.empty()) return b.finish();
    for (const auto& g : gens.gens) {
        SliceBasis shifts(Q - g.degree - n, n);
        for (const auto& m : shifts.monomials()) {
            Poly col(n + 1);
            for (int i = 0; i <= n; ++i) col += g.r[static_cast<std::size_t>(i)].times(m).derivative(i);
            b.add_column(col, rows);
        }
    }
    auto fi = partials(f);
    SliceBasis shifts(Q - d - n, n);
    for (int i = 0; i <= n; ++i)
        for (const auto& m : shifts.monomials()) b.add_column(fi[static_cast<std::size_t>(i)].times(m), rows);
    return b.finish();
}

linalg::SparseMat phi2_matrix(const Poly& f, int Q) {
    const int n = f.n();
    const int d = f.total_degree();
    linalg::SparseMat w_low = wedge_df_matrix(f, Q);       // n-forms of degree Q - d -> top slice Q
    linalg::SparseMat d_mid = ext_d_matrix(n, Q);          // n-forms of degree Q -> top slice Q
    linalg::SparseMat w_high = wedge_df_matrix(f, Q + d);  // n-forms of degree Q -> top slice Q + d
    std::vector<linalg::Triplet> t;
    const int c1 = static_cast<int>(w_low.cols());
    const int r1 = static_cast<int>(d_mid.rows());
    append_block(t, w_low, 0, 0);
    append_block(t, d_mid, 0, c1);
    append_block(t, w_high, r1, c1);
    return linalg::make_sparse(r1 + static_cast<int>(w_high.rows()), c1 + static_cast<int>(d_mid.cols()), t);
}

linalg::RankReport rank_syzygy_backend(const Poly& f, const SyzygyGens& gens, int Q, const RankRequest& req) {
    if (!gens.generates_module && gens.degree_bound < Q - f.n())
        throw std::invalid_argument("syzygy generators are not complete up to degree Q - n");
    linalg::SparseMat phi = phi_matrix(f, gens, Q);
    dump(req.dump_dir, "phi_Q" + std::to_string(Q) + ".txt", phi);
    return rank_of(phi, req, static_cast<std::uint64_t>(Q));
}

linalg::RankReport rank_direct_backend(const Poly& f, int Q, const RankRequest& req) {
    const int n = f.n();
    const int d = f.total_degree();
    linalg::SparseMat phi1 = wedge_df_matrix(f, Q + d);
    linalg::SparseMat phi2 = phi2_matrix(f, Q);
    dump(req.dump_dir, "phi1_Q" + std::to_string(Q) + ".txt", phi1);
    dump(req.dump_dir, "phi2_Q" + std::to_string(Q) + ".txt", phi2);
    auto r1 = rank_of(phi1, req, 1000003ull * static_cast<std::uint64_t>(Q) + 1);
    auto r2 = rank_of(phi2, req, 1000003ull * static_cast<std::uint64_t>(Q) + 2);
    const std::int64_t kappa1 = kernel_dim(phi1, r1);
    const std::int64_t kappa2 = kernel_dim(phi2, r2);
    const std::int64_t rank = kappa1 - kappa2 + (n + 1) * slice_dim(Q - d - n, n);
    if (rank < 0) throw InvariantViolation("direct backend produced a negative rank at Q=" + std::to_string(Q));
    return merge(r1, r2, static_cast<std::size_t>(rank));
}

std::int64_t e2_dim(int Q, int n, std::int64_t rank) {
    const std::int64_t total = Q - 1 < n ? 0 : binomial(Q - 1, n);
    const std::int64_t dim = total - rank;
    if (dim < 0) throw InvariantViolation("negative E2 dimension at Q=" + std::to_string(Q));
    return dim;
}

namespace {

// Runs task(i) for i in [0, count) on up to jobs threads.
template <class Task>
void run_parallel(std::size_t count, int jobs, Task&& task) {
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < std::min(workers, count); ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        task(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = count;
                    }
                }
            });
    }
    if (failure) std::rethrow_exception(failure);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

E2Page compute_page(const Poly& f, Mode mode, const PageOptions& options, const SyzygyGens* gens) {
    auto d = f.homogeneous_degree();
    if (!d || *d < 1) throw std::invalid_argument("expected a homogeneous polynomial of positive degree");
    const int n = f.n();
    E2Page page;
    page.n = n;
    page.d = *d;
    page.mode = ModeSpec::make(mode, n, *d, options.Q_max_override);

    SyzygyGens own;
    if (options.backend != Backend::direct && !gens) {
        SyzygyOptions so;
        so.method = options.rank.exact ? linalg::KernelMethod::exact : linalg::KernelMethod::modular;
        so.seed = options.seed;
        own = minimal_generators(f, page.mode.syzygy_degree_bound(), so);
        gens = &own;
    }

    for (int q = 0; q <= page.mode.q_max; ++q)
        for (int k = 1; k <= *d; ++k) {
            const int Q = q * *d + k;
            if (Q > page.mode.Q_max && !page.mode.zero_by_theory(q, k)) continue;
            page.cells.push_back({q, k, Q, 0, "", 0});
        }
    std::stable_sort(page.cells.begin(), page.cells.end(), [](const Cell& a, const Cell& b) { return a.Q < b.Q; });

    std::mutex progress_mutex;
    run_parallel(page.cells.size(), options.jobs, [&](std::size_t i) {
        Cell& cell = page.cells[i];
        const auto start = std::chrono::steady_clock::now();
        if (page.mode.zero_by_theory(cell.q, cell.k)) {
            cell.confidence = kSetByTheory;
        } else if (cell.Q - 1 < n) {
            cell.confidence = linalg::to_string(linalg::Confidence::certified);
        } else {
            RankRequest req{options.rank, options.seed, options.dump_dir};
            std::optional<linalg::RankReport> syz, direct;
            if (options.backend != Backend::direct) syz = rank_syzygy_backend(f, *gens, cell.Q, req);
            if (options.backend != Backend::syzygy) direct = rank_direct_backend(f, cell.Q, req);
            if (syz && direct && syz->rank != direct->rank)
                throw BackendMismatch("backends disagree at Q=" + std::to_string(cell.Q) + ": " +
                                      std::to_string(syz->rank) + " vs " + std::to_string(direct->rank));
            const auto& r = syz ? *syz : *direct;
            auto conf = r.confidence;
            if (syz && direct) conf = linalg::weakest(syz->confidence, direct->confidence);
            cell.dim = e2_dim(cell.Q, n, static_cast<std::int64_t>(r.rank));
            cell.confidence = linalg::to_string(conf);
        }
        cell.ms = elapsed_ms(start);
        if (options.progress) {
            std::lock_guard lock(progress_mutex);
            options.progress(cell);
        }
    });

    if (mode == Mode::curve) page.curve_h1 = curve_h1_dims(f, options);
    return page;
}

std::vector<Cell> curve_h1_dims(const Poly& f, const PageOptions& options) {
    auto d = f.homogeneous_degree();
    if (!d || f.n() != 2) throw std::invalid_argument("curve computations need a plane curve");
    std::vector<Cell> out(static_cast<std::size_t>(*d));
    run_parallel(out.size(), options.jobs, [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        const int k = static_cast<int>(i) + 1;
        linalg::SparseMat wedge = wedge_df_matrix(f, k + *d);
        linalg::SparseMat deriv = ext_d_matrix(2, k);
        std::vector<linalg::Triplet> t;
        append_block(t, wedge, 0, 0);
        append_block(t, deriv, static_cast<int>(wedge.rows()), 0);
        linalg::SparseMat m =
            linalg::make_sparse(static_cast<int>(wedge.rows() + deriv.rows()), static_cast<int>(deriv.cols()), t);
        dump(options.dump_dir, "curve_k" + std::to_string(k) + ".txt", m);
        auto r = linalg::compute_rank(m, options.rank, options.seed * 0x9E3779B97F4A7C15ull + 7919u * k);
        Cell& c = out[i];
        c.q = 0;
        c.k = k;
        c.Q = k;
        c.dim = kernel_dim(m, r);
        c.confidence = linalg::to_string(r.confidence);
        c.ms = elapsed_ms(start);
    });
    return out;
}

bool is_smooth(const Poly& f, std::uint64_t seed) {
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("expected a homogeneous polynomial");
    const int n = f.n();
    if (*d == 1) return true;
    const int m = (n + 1) * (*d - 2) + 1;
    linalg::SparseMat a = wedge_df_matrix(f, m + n + 1);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        linalg::PrimeField field(linalg::random_prime(rng));
        auto dense = linalg::reduce_mod(a, field);
        if (!dense) continue;
        if (static_cast<std::int64_t>(linalg::rank_in_place(*dense, field)) == a.rows()) return true;
    }
    return false;
}

}  // namespace milnor
