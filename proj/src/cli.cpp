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
#include "milnor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "milnor/genericity.hpp"
#include "milnor/monodromy.hpp"
#include "milnor/parse.hpp"
#include "milnor/spectral.hpp"
#include "milnor/syzygy.hpp"

namespace milnor::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
    std::string command;
    std::string poly;
    std::string input;
    std::string vars;
    std::string mode = "general";
    std::string backend = "syzygy";
    int primes = 2;
    bool exact = false;
    bool no_fallback = false;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<std::int64_t> chi;
    std::optional<std::int64_t> bn;
    std::string delta1;
    std::string eig;
    std::string nonresonant;
    bool json = false;
    std::string dump_dir;
    bool assume_reduced = false;
    std::optional<int> qmax;
    bool generators = false;
    std::optional<int> max_degree;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Input {
    Poly f;
    std::vector<std::string> names;
    std::string text;
};

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw UsageError("empty variable name in '" + list + "'");
        out.push_back(item);
    }
    return out;
}

// x, y, z, w, u, v up to the last one used
std::vector<std::string> infer_names(const std::string& text) {
    const std::vector<std::string> order{"x", "y", "z", "w", "u", "v"};
    int last = -1;
    for (const auto& id : identifiers_in(text)) {
        auto it = std::find(order.begin(), order.end(), id);
        if (it == order.end()) throw UsageError("cannot infer variables (found '" + id + "'); pass --vars");
        last = std::max(last, static_cast<int>(it - order.begin()));
    }
    if (last < 1) last = 1;
    return {order.begin(), order.begin() + last + 1};
}

Input read_input(const Config& c) {
    std::string text = c.poly;
    std::string vars = c.vars;
    if (!c.input.empty()) {
        if (!c.poly.empty()) throw UsageError("give either --poly or --input, not both");
        std::ifstream in(c.input);
        if (!in) throw UsageError("cannot open " + c.input);
        std::string line, file_vars;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw UsageError(c.input + ":" + std::to_string(lineno) + ": expected 'key = value'");
            std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            if (key == "vars") file_vars = value;
            else if (key == "f") text = value;
            else throw UsageError(c.input + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        if (vars.empty()) vars = file_vars;
    }
    if (text.empty()) throw UsageError("no polynomial given (use --poly or --input)");
    Input r;
    r.text = text;
    r.names = vars.empty() ? infer_names(text) : split_names(vars);
    r.f = parse_poly(text, r.names);
    auto d = r.f.homogeneous_degree();
    if (!d) throw UsageError("the polynomial must be nonzero and homogeneous");
    if (*d < 1) throw UsageError("the polynomial must have positive degree");
    return r;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("expected a comma separated list of integers, got '" + s + "'");
        }
    }
    return out;
}

std::map<int, std::int64_t> parse_eig(const std::string& s) {
    std::map<int, std::int64_t> out;
    try {
        for (const auto& [k, v] : CyclotomicPoly::parse(s).factors) out[k] = v;
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--eig: ") + e.what());
    }
    return out;
}

PageOptions page_options(const Config& c, std::ostream& err) {
    PageOptions o;
    o.backend = parse_backend(c.backend);
    o.rank.prime_count = c.primes;
    o.rank.exact = c.exact;
    o.rank.exact_fallback = !c.no_fallback;
    o.seed = c.seed;
    o.jobs = c.jobs;
    o.Q_max_override = c.qmax;
    if (!c.dump_dir.empty()) o.dump_dir = c.dump_dir;
    o.progress = [&err](const Cell& cell) {
        err << "Q=" << cell.Q << " q=" << cell.q << " k=" << cell.k << " dim=" << cell.dim << " ms="
            << static_cast<long long>(cell.ms) << '\n';
    };
    return o;
}

ordered_json cells_json(const std::vector<Cell>& cells) {
    ordered_json a = ordered_json::array();
    for (const auto& c : cells)
        a.push_back({{"q", c.q}, {"k", c.k}, {"Q", c.Q}, {"dim", c.dim}, {"confidence", c.confidence}});
    return a;
}

ordered_json cyclotomic_json(const CyclotomicPoly& p) {
    ordered_json o = ordered_json::object();
    for (const auto& [e, a] : p.factors) o[std::to_string(e)] = a;
    return o;
}

ordered_json spectrum_json(const PoleSpectrum& s) {
    ordered_json a = ordered_json::array();
    for (const auto& [Q, m] : s.entries)
        a.push_back({{"Q", Q}, {"alpha", std::to_string(Q) + "/" + std::to_string(s.d)}, {"mult", m}});
    return a;
}

ordered_json cert_json(const TopComputabilityCert& c) {
    ordered_json o{{"kind", "top-computability"}, {"k", c.k},           {"m", c.m},
                   {"status", c.status},          {"source", c.source}, {"e2_sum", c.e2_sum}};
    if (c.external) o["external"] = *c.external;
    o["detail"] = c.detail;
    return o;
}

void print_page(std::ostream& out, const E2Page& page) {
    out << "E2 dimensions, rows q, columns k (Q = q*d + k; '.' not computed, '*' zero by theory)\n";
    out << std::setw(6) << "";
    for (int k = 1; k <= page.d; ++k) out << std::setw(6) << ("k=" + std::to_string(k));
    out << '\n';
    for (int q = 0; q <= page.mode.q_max; ++q) {
        out << std::setw(6) << ("q=" + std::to_string(q));
        for (int k = 1; k <= page.d; ++k) {
            const Cell* c = page.find(q, k);
            std::string v = !c ? "." : c->confidence == kSetByTheory ? "*" : std::to_string(c->dim);
            out << std::setw(6) << v;
        }
        out << '\n';
    }
    if (!page.curve_h1.empty()) {
        out << std::setw(6) << "H^1";
        for (const auto& c : page.curve_h1) out << std::setw(6) << c.dim;
        out << '\n';
    }
}

struct Context {
    Config cfg;
    Input in;
    Poly f;  // primitive
    int n = 0;
    int d = 0;
    ordered_json certificates = ordered_json::array();
};

void check_reduced(Context& ctx) {
    if (ctx.cfg.assume_reduced) {
        ctx.certificates.push_back({{"kind", "squarefree"}, {"status", "assumed"}});
        return;
    }
    if (!squarefree_probabilistic(ctx.f, ctx.cfg.seed ^ 0x2545F4914F6CDD1Dull))
        throw std::domain_error("the polynomial has a repeated factor (V is not reduced)");
    ctx.certificates.push_back({{"kind", "squarefree"}, {"status", "certified"}});
}

ordered_json header_json(const Context& ctx) {
    return ordered_json{{"f", ctx.in.f.to_string(ctx.in.names)}, {"vars", ctx.in.names}, {"d", ctx.d}, {"n", ctx.n}};
}

std::optional<SyzygyGens> generators_for(const Context& ctx, int D, bool stop_when_free) {
    SyzygyOptions so;
    so.method = ctx.cfg.exact ? linalg::KernelMethod::exact : linalg::KernelMethod::modular;
    so.seed = ctx.cfg.seed;
    so.stop_when_free = stop_when_free;
    return minimal_generators(ctx.f, D, so);
}

struct PageRun {
    E2Page page;
    PoleSpectrum spectrum;
    SymmetryReport symmetry;
    std::vector<TopComputabilityCert> top;
    std::optional<SyzygyGens> gens;
    std::optional<FreenessReport> freeness;
};

PageRun run_page(Context& ctx, std::ostream& err) {
    PageRun r;
    const Mode mode = parse_mode(ctx.cfg.mode);
    PageOptions o = page_options(ctx.cfg, err);
    if (o.backend != Backend::direct) {
        ModeSpec spec = ModeSpec::make(mode, ctx.n, ctx.d, ctx.cfg.qmax);
        r.gens = generators_for(ctx, spec.syzygy_degree_bound(), true);
        if (r.gens->generates_module) r.freeness = saito_check(ctx.f, *r.gens);
    }
    r.page = compute_page(ctx.f, mode, o, r.gens ? &*r.gens : nullptr);
    if (o.backend == Backend::both) ctx.certificates.push_back({{"kind", "backend-equivalence"}, {"status", "passed"}});
    r.spectrum = spectrum_from_page(r.page);
    r.symmetry = symmetry_report(r.spectrum);

    ExternalData ext;
    ext.bn = ctx.cfg.bn;
    ext.eig = parse_eig(ctx.cfg.eig);
    ext.nonresonant = parse_int_list(ctx.cfg.nonresonant);
    ext.chi = ctx.cfg.chi;
    if (!ext.chi && r.freeness && r.freeness->is_free) ext.chi = static_cast<std::int64_t>(poincare_free(r.freeness->exponents).chi);
    if (mode == Mode::general || mode == Mode::curve) ext.smooth = is_smooth(ctx.f, ctx.cfg.seed);
    r.top = topcomputability_check(r.page, ext);
    for (const auto& c : r.top) ctx.certificates.push_back(cert_json(c));
    return r;
}

void write_text_page(std::ostream& out, const Context& ctx, const PageRun& r) {
    out << "f = " << ctx.in.f.to_string(ctx.in.names) << "  (d=" << ctx.d << ", n=" << ctx.n
        << ", mode " << ctx.cfg.mode << ")\n";
    print_page(out, r.page);
    out << "spectrum: " << r.spectrum.to_text() << '\n';
    out << "spectrum total: " << r.spectrum.total() << '\n';
    out << "symmetric: " << (r.symmetry.symmetric ? "yes" : "no");
    if (!r.symmetry.symmetric) {
        out << " (Q =";
        for (int q : r.symmetry.mismatches) out << ' ' << q;
        out << ')';
    }
    out << '\n';
    for (const auto& c : r.top)
        if (c.status != "conjectural")
            out << "top-computability" << (c.k ? " k=" + std::to_string(c.k) : std::string(" all k")) << ": "
                << c.status << " (" << c.source << "; " << c.detail << ")\n";
}

int cmd_e2(Context& ctx, std::ostream& out, std::ostream& err) {
    check_reduced(ctx);
    PageRun r = run_page(ctx, err);
    if (ctx.cfg.json) {
        ordered_json j = header_json(ctx);
        j["mode"] = ctx.cfg.mode;
        j["backend"] = ctx.cfg.backend;
        j["cells"] = cells_json(r.page.cells);
        if (!r.page.curve_h1.empty()) j["curve_h1"] = cells_json(r.page.curve_h1);
        j["spectrum"] = spectrum_json(r.spectrum);
        j["certificates"] = ctx.certificates;
        j["symmetric"] = r.symmetry.symmetric;
        out << j.dump(2) << '\n';
    } else {
        write_text_page(out, ctx, r);
    }
    return kOk;
}

int cmd_alexander(Context& ctx, std::ostream& out, std::ostream& err) {
    check_reduced(ctx);
    PageRun r = run_page(ctx, err);
    std::map<int, AlexanderResult> deltas;
    AlexanderResult top = alexander_top(r.page, r.top);
    ctx.certificates.push_back({{"kind", "galois-constancy"}, {"degree", ctx.n}, {"status", "passed"}});
    deltas[ctx.n] = top;
    deltas[0] = {CyclotomicPoly::parse("1:1"), "certified", "F is connected"};

    std::optional<std::int64_t> chi = ctx.cfg.chi;
    std::string chi_source = "supplied";
    if (!chi && r.freeness && r.freeness->is_free) {
        chi = static_cast<std::int64_t>(poincare_free(r.freeness->exponents).chi);
        chi_source = "free exponents";
    }

    if (ctx.n == 2 || ctx.n == 3) {
        AlexanderResult d1;
        if (!ctx.cfg.delta1.empty()) {
            d1 = {CyclotomicPoly::parse(ctx.cfg.delta1), "supplied", ""};
        } else if (ctx.n == 2) {
            auto h1 = r.page.curve_h1.empty() ? curve_h1_dims(ctx.f, page_options(ctx.cfg, err)) : r.page.curve_h1;
            d1 = alexander_curve(h1, ctx.d);
            ctx.certificates.push_back({{"kind", "galois-constancy"}, {"degree", 1}, {"status", "passed"}});
        } else {
            auto s = alexander_h1_by_section(ctx.f, page_options(ctx.cfg, err));
            d1 = s.result;
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : s.section.coefficients) coeffs.push_back(to_string(c));
            ctx.certificates.push_back({{"kind", "genericity"},
                                        {"status", "probabilistically generic"},
                                        {"section_seed", s.section.seed},
                                        {"coefficients", coeffs}});
        }
        deltas[1] = d1;
        if (ctx.n == 3) {
            if (!chi) {
                err << "error: Delta^2 needs the Euler characteristic of the complement (--chi); it is only derived "
                       "automatically for free divisors\n";
                return kMissingChi;
            }
            std::vector<std::optional<CyclotomicPoly>> list{deltas[0].poly, deltas[1].poly, std::nullopt, top.poly};
            CyclotomicPoly d2 = euler_solve(list, *chi, ctx.d);
            deltas[2] = {d2, top.confidence == "certified" && d1.confidence != "probabilistically generic"
                                 ? "certified"
                                 : "conjectural",
                         "from the Euler characteristic (" + chi_source + ")"};
        } else if (chi) {
            std::vector<std::optional<CyclotomicPoly>> list{deltas[0].poly, deltas[1].poly, std::nullopt};
            CyclotomicPoly expected = euler_solve(list, *chi, ctx.d);
            bool match = expected == top.poly;
            ctx.certificates.push_back({{"kind", "euler"},
                                        {"status", match ? "passed" : "failed"},
                                        {"expected_top", expected.to_string()}});
        }
    }

    if (ctx.cfg.json) {
        ordered_json j = header_json(ctx);
        j["mode"] = ctx.cfg.mode;
        j["backend"] = ctx.cfg.backend;
        j["cells"] = cells_json(r.page.cells);
        if (!r.page.curve_h1.empty()) j["curve_h1"] = cells_json(r.page.curve_h1);
        j["spectrum"] = spectrum_json(r.spectrum);
        ordered_json alex = ordered_json::object();
        for (auto it = deltas.rbegin(); it != deltas.rend(); ++it) alex[std::to_string(it->first)] = cyclotomic_json(it->second.poly);
        j["alexander"] = alex;
        ordered_json conf = ordered_json::object();
        for (auto it = deltas.rbegin(); it != deltas.rend(); ++it) conf[std::to_string(it->first)] = it->second.confidence;
        j["alexander_confidence"] = conf;
        if (chi) j["chi"] = *chi;
        j["certificates"] = ctx.certificates;
        j["symmetric"] = r.symmetry.symmetric;
        out << j.dump(2) << '\n';
    } else {
        write_text_page(out, ctx, r);
        for (auto it = deltas.rbegin(); it != deltas.rend(); ++it)
            out << "Delta^" << it->first << " = " << it->second.poly.to_string() << "  [" << it->second.confidence
                << "]\n";
        if (chi) out << "chi = " << *chi << " (" << chi_source << ")\n";
    }
    return kOk;
}

int cmd_syzygy(Context& ctx, bool freeness_only, std::ostream& out) {
    // Exponents of a free divisor add up to d - 1, so that bound decides freeness.
    const int D = freeness_only ? ctx.d - 1 : ctx.cfg.max_degree.value_or(ctx.d - 1);
    auto gens = generators_for(ctx, D, true);
    FreenessReport rep = saito_check(ctx.f, *gens);
    if (ctx.cfg.json) {
        ordered_json j = header_json(ctx);
        j["degree_bound"] = gens->generates_module ? ordered_json(nullptr) : ordered_json(D);
        j["degrees"] = gens->degrees();
        if (ctx.cfg.generators && !freeness_only) {
            ordered_json g = ordered_json::array();
            for (const auto& s : gens->gens) {
                ordered_json comps = ordered_json::array();
                for (const auto& c : s.r) comps.push_back(c.to_string(ctx.in.names));
                g.push_back({{"degree", s.degree}, {"r", comps}});
            }
            j["generators"] = g;
        }
        j["free"] = rep.is_free;
        if (rep.is_free) {
            j["exponents"] = rep.exponents;
            auto p = poincare_free(rep.exponents);
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : p.coefficients) coeffs.push_back(c.str());
            j["poincare"] = coeffs;
            j["chi"] = p.chi.str();
            j["determinant_scale"] = to_string(rep.determinant_scale);
        }
        j["reason"] = rep.reason;
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "f = " << ctx.in.f.to_string(ctx.in.names) << "  (d=" << ctx.d << ", n=" << ctx.n << ")\n";
    if (!freeness_only) {
        out << "generator degrees:";
        for (int dj : gens->degrees()) out << ' ' << dj;
        out << (gens->generates_module ? "  (whole module)" : "  (complete up to degree " + std::to_string(D) + ")")
            << '\n';
        if (ctx.cfg.generators)
            for (const auto& s : gens->gens) {
                out << "  [" << s.degree << "] (";
                for (std::size_t i = 0; i < s.r.size(); ++i) out << (i ? ", " : "") << s.r[i].to_string(ctx.in.names);
                out << ")\n";
            }
    }
    out << (rep.is_free ? "free" : rep.reason);
    if (rep.is_free) {
        out << ", exponents";
        for (int e : rep.exponents) out << ' ' << e;
        auto p = poincare_free(rep.exponents);
        out << "\npoincare polynomial:";
        for (const auto& c : p.coefficients) out << ' ' << c;
        out << "\nchi = " << p.chi;
    }
    out << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"milnor: second pages of the pole order spectral sequence, spectra and Alexander polynomials"};
    app.require_subcommand(1, 1);
    Config c;
    std::optional<std::int64_t> chi, bn;
    std::optional<int> qmax;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--poly", c.poly, "homogeneous polynomial, e.g. \"x*y*(x+y)\"");
        sub->add_option("--input", c.input, "file with 'vars = ...' and 'f = ...' lines")->check(CLI::ExistingFile);
        sub->add_option("--vars", c.vars, "comma separated variable names (default x,y,z,w,u,v as used)");
        sub->add_option("--mode", c.mode, "arrangement | free_lqh | general | curve")
            ->check(CLI::IsMember({"arrangement", "free_lqh", "general", "curve"}));
        sub->add_option("--backend", c.backend, "syzygy | direct | both")
            ->check(CLI::IsMember({"syzygy", "direct", "both"}));
        sub->add_option("--primes", c.primes, "number of primes for modular ranks")->check(CLI::Range(1, 16));
        sub->add_flag("--exact", c.exact, "exact rational elimination instead of modular ranks");
        sub->add_flag("--no-fallback", c.no_fallback, "fail instead of switching to exact ranks when primes disagree");
        sub->add_option("--seed", c.seed, "random seed");
        sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 1024));
        sub->add_option("--chi", chi, "Euler characteristic of the complement");
        sub->add_option("--bn", bn, "external top Betti number of the Milnor fiber");
        sub->add_option("--eig", c.eig, "external eigenspace dimensions k:dim,...");
        sub->add_option("--delta1", c.delta1, "known Delta^1 as order:exponent,... (e.g. 1:5)");
        sub->add_option("--nonresonant", c.nonresonant, "comma separated k declared non-resonant");
        sub->add_flag("--json", c.json, "JSON output");
        sub->add_option("--dump-matrices", c.dump_dir, "write every assembled matrix to this directory");
        sub->add_flag("--assume-reduced", c.assume_reduced, "skip the squarefree check");
        sub->add_option("--qmax", qmax, "override the largest Q of the mode");
    };
    add_common(app.add_subcommand("e2", "second page dimensions and pole order spectrum"));
    add_common(app.add_subcommand("alexander", "Alexander polynomials"));
    auto* syz = app.add_subcommand("syzygy", "minimal generators of the Jacobian syzygies");
    add_common(syz);
    syz->add_flag("--generators", c.generators, "print the generators");
    std::optional<int> max_degree;
    syz->add_option("--max-degree", max_degree, "largest generator degree searched (default d - 1)")
        ->check(CLI::Range(0, 1000));
    add_common(app.add_subcommand("freeness", "Saito freeness test"));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    c.chi = chi;
    c.bn = bn;
    c.qmax = qmax;
    c.max_degree = max_degree;
    c.command = app.get_subcommands().front()->get_name();

    try {
        Context ctx;
        ctx.cfg = c;
        ctx.in = read_input(c);
        ctx.f = ctx.in.f.primitive();
        ctx.n = ctx.f.n();
        ctx.d = ctx.f.total_degree();
        if (ctx.n < 1) throw UsageError("need at least two variables");
        if (c.mode == "curve" && ctx.n != 2) throw UsageError("curve mode needs exactly three variables");
        if (c.command == "e2") return cmd_e2(ctx, out, err);
        if (c.command == "alexander") return cmd_alexander(ctx, out, err);
        return cmd_syzygy(ctx, c.command == "freeness", out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kNotReduced;
    } catch (const linalg::RankDisagreement& e) {
        err << "error: " << e.what() << '\n';
        return kRankDisagreement;
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return kInvariantViolation;
    } catch (const GaloisViolation& e) {
        err << "error: " << e.what() << '\n';
        return kGaloisViolation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace milnor::cli
