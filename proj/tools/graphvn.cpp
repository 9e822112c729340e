#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "graphvn/enumerate.hpp"
#include "graphvn/report.hpp"

using namespace graphvn;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

struct Options {
    std::string config_path;
    std::string mode = "rational";
    unsigned precision = 50;
    std::string tolerance = "1e-12";
    std::string rng = rng_name();
    bool json = false;

    bool real_mode() const { return mode == "real"; }

    void load_config() {
        if (config_path.empty()) return;
        Json cfg = Json::parse(slurp(config_path));
        if (cfg.contains("mode")) mode = cfg["mode"].get<std::string>();
        if (cfg.contains("precision")) precision = cfg["precision"].get<unsigned>();
        if (cfg.contains("tolerance")) tolerance = cfg["tolerance"].get<std::string>();
        if (cfg.contains("rng")) rng = cfg["rng"].get<std::string>();
        if (cfg.contains("output")) json = cfg["output"].get<std::string>() == "json";
    }

    void apply() {
        load_config();
        if (mode != "rational" && mode != "real")
            throw InvariantError("mode must be 'rational' or 'real'");
        if (real_mode() && precision < 15)
            throw InvariantError("real mode requires at least 15 digits of precision");
        if (rng != rng_name())
            throw InvariantError("unknown RNG algorithm '" + rng + "'; this build provides " +
                                 rng_name());
        NumericConfig::init(precision, tolerance);
    }
};

void print_decomposition(const WeightedGraph& g, const Decomposition& d,
                         const char* heading) {
    std::cout << heading << ":\n";
    if (!d.factor_form) {
        std::cout << "  not a factor-plus-atoms form (fewer than 2 edge units)\n";
        std::cout << "  fdim " << d.fdim_value.str() << "\n";
        return;
    }
    std::cout << "  factor L(F_" << d.factor->t.str() << ") weight "
              << d.factor->weight.str() << "\n";
    for (const auto& [v, a] : d.atoms)
        std::cout << "  atom at " << g.ids[v] << " mass " << a.str() << "\n";
    std::cout << "  fdim " << d.fdim_value.str() << "\n";
}

int cmd_decompose(const Options& opt, const std::string& path, const std::string& route) {
    WeightedGraph g = parse_graph(slurp(path), opt.real_mode());
    require_valid(g);
    Decomposition direct = decompose_direct(g);
    std::optional<IncrementalResult> inc;
    if (route != "direct") inc = decompose_incremental(g);
    if (route == "incremental") direct = inc->final;  // report the chosen route's values
    if (opt.json) {
        std::cout << decompose_report(g, direct, inc ? &*inc : nullptr).dump(2) << "\n";
        return 0;
    }
    print_decomposition(g, direct, route == "incremental" ? "incremental" : "direct");
    if (route == "both") {
        print_decomposition(g, inc->final, "incremental");
        std::cout << "route agreement: " << (direct.agrees_with(inc->final) ? "yes" : "no")
                  << "\n";
    }
    return 0;
}

PrincipalGraph load_principal(const std::string& name, const std::string& delta,
                              bool real_mode) {
    if (file_exists(name)) return PrincipalGraph::from_text(slurp(name), real_mode);
    std::optional<Scalar> d;
    if (!delta.empty()) d = Scalar::parse(delta, real_mode);
    return PrincipalGraph::builtin(name, d);
}

int cmd_truncation(const Options& opt, const std::string& name, const std::string& delta,
                   unsigned kmax) {
    PrincipalGraph pg = load_principal(name, delta, opt.real_mode());
    auto rows = truncation_table(pg, kmax);
    if (opt.json) {
        std::cout << truncation_report(name, pg.delta(), rows).dump(2) << "\n";
        return 0;
    }
    std::cout << "graph " << name << " delta " << pg.delta().str() << "\n";
    for (const auto& r : rows) {
        std::cout << "k=" << r.k << " fdim " << r.fdim.str() << " t " << r.t.str()
                  << " t' " << r.t_prime.str();
        for (const auto& [id, mass] : r.atoms)
            std::cout << " atom(" << id << ")=" << mass.str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_gjs(const Options& opt, const std::string& name, const std::string& delta) {
    PrincipalGraph pg = load_principal(name, delta, opt.real_mode());
    GjsCheck check = gjs_finite_depth_check(pg);
    if (opt.json) {
        std::cout << gjs_report(name, pg.delta(), check).dump(2) << "\n";
        return 0;
    }
    if (!check.applicable) {
        std::cout << "not applicable: " << check.reason << "\n";
        return 0;
    }
    std::cout << "engine t' " << check.engine_t.str() << "\n";
    std::cout << "global index " << check.global_index.str() << "\n";
    std::cout << "formula 1+2(delta-1)I " << check.formula_t.str() << "\n";
    std::cout << "difference " << check.difference.str() << " ("
              << (check.agrees ? "agrees" : "DISCREPANCY") << ")\n";
    return 0;
}

GrElement parse_element(const std::string& gen, const Scalar& delta) {
    if (gen == "cup") return GrElement::single(TLDiagram::cup(), delta);
    if (gen.rfind("cups:", 0) == 0)
        return GrElement::single(TLDiagram::cups(std::stoi(gen.substr(5))), delta);
    // Element file: lines `term <coeff> <p0> <p1> ...` (matching array).
    GrElement g(delta);
    std::istringstream in(slurp(gen));
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head != "term") throw ParseError("expected 'term' line in element file");
        std::string coeff;
        ls >> coeff;
        std::vector<int> match;
        int p;
        while (ls >> p) match.push_back(p);
        g.add_term(TLDiagram(std::move(match)), Scalar::parse(coeff));
    }
    return g;
}

int cmd_tl(const Options& opt, const std::string& delta_text, int n_max,
           const std::string& gen, int hankel) {
    bool symbolic = delta_text == "symbolic";
    // Symbolic output never evaluates, so the placeholder value is inert.
    Scalar delta = symbolic ? Scalar(2) : Scalar::parse(delta_text, opt.real_mode());
    GrElement g = parse_element(gen, delta);
    Json rep = tl_report(g, n_max, hankel, symbolic);
    if (opt.json) {
        std::cout << rep.dump(2) << "\n";
        return 0;
    }
    for (const auto& row : rep["moments"]) {
        std::cout << "m_" << row["n"].get<int>() << " =";
        for (const auto& term : row["polynomial"])
            std::cout << " + " << term["coeff"].get<std::string>() << " d^"
                      << term["loops"].get<int>();
        if (row.contains("value")) std::cout << "  = " << row["value"].get<std::string>();
        std::cout << "\n";
    }
    if (rep.contains("hankel_psd"))
        std::cout << "hankel(" << hankel << ") psd: "
                  << (rep["hankel_psd"].get<bool>() ? "yes" : "no") << "\n";
    return 0;
}

int cmd_simulate(const Options& opt, double mu_v, double mu_w, int n, int trials,
                 std::uint64_t seed) {
    EdgeModel m{mu_v, mu_w, n, trials, seed};
    EdgeReport r = simulate_edge(m);
    if (opt.json) {
        std::cout << edge_report_json(r).dump(2) << "\n";
        return 0;
    }
    std::printf("atom formula %.6f estimate %.6f ci [%.6f, %.6f]\n", r.atom_formula,
                r.atom_estimate, r.ci_low, r.ci_high);
    std::printf("bulk moments %.6f %.6f %.6f %.6f\n", r.moments[0], r.moments[1],
                r.moments[2], r.moments[3]);
    return 0;
}

int cmd_semicircular(const Options& opt, int n, int trials, std::uint64_t seed) {
    SemicircleReport r = simulate_semicircular(n, trials, seed);
    if (opt.json) {
        std::cout << semicircle_report_json(r).dump(2) << "\n";
        return 0;
    }
    std::printf("m2 %.6f (dev %+.6f)  m4 %.6f (dev %+.6f)  m6 %.6f (dev %+.6f)\n", r.m2,
                r.dev2, r.m4, r.dev4, r.m6, r.dev6);
    return 0;
}

int cmd_selftest(const Options& opt) {
    std::size_t count = for_each_small_graph(
        3, 4, {Scalar(1), Scalar::rational(1, 2), Scalar::rational(1, 3)},
        [](const WeightedGraph& g) {
            if (!fdim_closed_form(g).eq(fdim_edge_sum(g)))
                throw InvariantError("free-dimension identity failed on " + format_graph(g));
            if (g.edge_units() < 2) return;
            Decomposition a = decompose_direct(g);
            IncrementalResult b = decompose_incremental(g);
            if (!a.agrees_with(b.final))
                throw InvariantError("route disagreement on " + format_graph(g));
        });
    if (!opt.json)
        std::cout << "selftest passed on " << count << " graphs\n";
    else
        std::cout << Json{{"report", "selftest"}, {"graphs", count}, {"passed", true}}.dump(2)
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph von Neumann algebra decomposition engine"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--config", opt.config_path, "JSON config file");
    app.add_option("--mode", opt.mode, "scalar mode: rational|real");
    app.add_option("--precision", opt.precision, "real-mode precision digits");
    app.add_option("--tolerance", opt.tolerance, "comparison tolerance");
    app.add_flag("--json", opt.json, "emit a JSON report");

    std::string graph_path, route = "both";
    auto* dec = app.add_subcommand("decompose", "decompose a weighted graph");
    dec->add_option("graphfile", graph_path)->required();
    dec->add_option("--route", route)->check(CLI::IsMember({"direct", "incremental", "both"}));

    std::string pg_name, pg_delta;
    unsigned kmax = 5;
    auto* tr = app.add_subcommand("truncation-sequence",
                                  "factor parameters along principal-graph truncations");
    tr->add_option("--graph", pg_name, "builtin name or graph file")->required();
    tr->add_option("--delta", pg_delta, "modulus for Ainf or file graphs");
    tr->add_option("--kmax", kmax)->required();

    std::string gjs_name, gjs_delta;
    auto* gj = app.add_subcommand("gjs-check", "finite-depth parameter cross-check");
    gj->add_option("--graph", gjs_name)->required();
    gj->add_option("--delta", gjs_delta);

    std::string tl_delta = "symbolic", tl_gen = "cup";
    int tl_n = 6, tl_hankel = -1;
    auto* tl = app.add_subcommand("tl-moments", "diagram trace moments");
    tl->add_option("--delta", tl_delta, "loop value or 'symbolic'");
    tl->add_option("--n", tl_n, "highest moment")->required();
    tl->add_option("--generator", tl_gen, "cup | cups:<k> | element file");
    tl->add_option("--hankel", tl_hankel, "Hankel PSD check size");

    double mu_v = 2, mu_w = 1;
    int sim_n = 100, sim_trials = 10;
    std::uint64_t sim_seed = 1;
    auto* se = app.add_subcommand("simulate-edge", "free-Poisson atom Monte Carlo");
    se->add_option("--mu-v", mu_v)->required();
    se->add_option("--mu-w", mu_w)->required();
    se->add_option("--n", sim_n)->required();
    se->add_option("--trials", sim_trials)->required();
    se->add_option("--seed", sim_seed)->required();

    int sc_n = 1000, sc_trials = 10;
    std::uint64_t sc_seed = 1;
    auto* sc = app.add_subcommand("simulate-semicircular", "semicircle moment Monte Carlo");
    sc->add_option("--n", sc_n);
    sc->add_option("--trials", sc_trials);
    sc->add_option("--seed", sc_seed);

    auto* st = app.add_subcommand("selftest", "route agreement and identity suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ErrorCode::Usage);
    }

    try {
        opt.apply();
        if (dec->parsed()) return cmd_decompose(opt, graph_path, route);
        if (tr->parsed()) return cmd_truncation(opt, pg_name, pg_delta, kmax);
        if (gj->parsed()) return cmd_gjs(opt, gjs_name, gjs_delta);
        if (tl->parsed()) return cmd_tl(opt, tl_delta, tl_n, tl_gen, tl_hankel);
        if (se->parsed()) return cmd_simulate(opt, mu_v, mu_w, sim_n, sim_trials, sim_seed);
        if (sc->parsed()) return cmd_semicircular(opt, sc_n, sc_trials, sc_seed);
        if (st->parsed()) return cmd_selftest(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return static_cast<int>(ErrorCode::Parse);
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return static_cast<int>(ErrorCode::Invariant);
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return static_cast<int>(ErrorCode::Numeric);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ErrorCode::Invariant);
    }
    return static_cast<int>(ErrorCode::Usage);
}
