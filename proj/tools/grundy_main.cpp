// grundy - Grundy number toolkit: solvers parameterized by width measures,
// verifiers for colorings and width certificates, and generators for the
// hard instance families.
//
// exit codes: 0 success / verified, 1 input or verification failure,
// 2 size or state budget exceeded

#include "grundy/binomial.hpp"
#include "grundy/cliquewidth.hpp"
#include "grundy/coloring.hpp"
#include "grundy/decomposition.hpp"
#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph.hpp"
#include "grundy/reductions.hpp"
#include "grundy/solver_dp.hpp"
#include "grundy/solver_modular.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace grundy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

DpOptions dp_options_from_env() {
    DpOptions opts;
    if (const char* env = std::getenv("GRUNDY_BUDGET")) {
        try {
            opts.state_budget = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("GRUNDY_BUDGET is not a number");
        }
    }
    return opts;
}

struct SolveConfig {
    std::string algo = "auto";
    std::string decomp_file;
    std::string witness_out;
    int jobs = 1;
    bool heuristic_log_cap = false;
};

GrundyColoring orderings_witness(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    GrundyColoring best = first_fit(g, order);
    std::vector<int> perm = order;
    do {
        GrundyColoring c = first_fit(g, perm);
        if (c.max_color > best.max_color) best = c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int solve_one(const SolveConfig& cfg, const std::string& path, std::ostream& out) {
    Graph g = read_graph_file(path);
    DpOptions opts = dp_options_from_env();
    opts.heuristic_log_cap = cfg.heuristic_log_cap;
    std::string algo = cfg.algo;
    int gamma = -1;
    std::optional<GrundyColoring> witness;

    if (algo == "auto") {
        TwinPartition tp = compute_twin_classes(g);
        if (tp.count() <= 6) {
            algo = "nd";
            out << "auto: " << tp.count() << " twin classes, using nd\n";
        } else if (g.vertex_count() <= 12) {
            algo = "tw";
            out << "auto: small graph, using tw with an exact decomposition\n";
        } else if (g.vertex_count() <= 18) {
            algo = "exact";
            out << "auto: using the exact subset recursion\n";
        } else {
            throw budget_exceeded("auto: no algorithm within budget (n > 18, " +
                                  std::to_string(tp.count()) + " twin classes)");
        }
    }

    if (algo == "orderings") {
        if (g.vertex_count() > 9) throw budget_exceeded("orderings: n > 9");
        GrundyColoring best = orderings_witness(g);
        gamma = best.max_color;
        witness = best;
    } else if (algo == "exact") {
        GrundyColoring w = gamma_exact_witness(g);
        gamma = w.max_color;
        witness = w;
    } else if (algo == "tw") {
        TreeDecomposition td;
        if (!cfg.decomp_file.empty()) {
            td = tree_decomposition_from_string(slurp(cfg.decomp_file));
        } else {
            td = exact_treewidth(g).second;
            out << "computed exact tree decomposition, width " << td.width() << "\n";
        }
        gamma = gamma_tw(g, td, opts);
        auto [ok, w] = grundy_decision_dp(g, to_nice(td), gamma, opts);
        if (ok) witness = w;
    } else if (algo == "pw") {
        PathDecomposition pd;
        if (!cfg.decomp_file.empty()) {
            pd = path_decomposition_from_string(slurp(cfg.decomp_file));
        } else {
            pd = exact_pathwidth(g).second;
            out << "computed exact path decomposition, width " << pd.width() << "\n";
        }
        out << "pathwidth cap 8*(w+1) = " << 8 * (pd.width() + 1) << ", scan starts at "
            << gamma_pw_cap(g, pd.width()) << "\n";
        gamma = gamma_pw(g, pd, opts);
        auto [ok, w] = grundy_decision_dp(g, to_nice(to_tree(pd)), gamma, opts);
        if (ok) witness = w;
    } else if (algo == "nd") {
        NdResult r = gamma_nd(g);
        gamma = r.gamma;
        witness = r.coloring;
    } else if (algo == "mw") {
        gamma = gamma_mw(g);
    } else {
        throw std::invalid_argument("unknown algorithm: " + cfg.algo);
    }

    out << "gamma = " << gamma << "\n";
    out << "algo = " << algo << "\n";
    if (!cfg.witness_out.empty()) {
        if (!witness) throw std::invalid_argument("algorithm '" + algo + "' yields no witness");
        if (g.vertex_count() > 0 && !verify_grundy(g, *witness).valid)
            throw std::logic_error("internal error: witness failed verification");
        spill(cfg.witness_out, coloring_to_json(*witness));
        out << "witness = " << cfg.witness_out << "\n";
    }
    return kExitOk;
}

int run_solve(const SolveConfig& cfg, const std::vector<std::string>& files) {
    if (files.size() == 1 || cfg.jobs <= 1) {
        int worst = kExitOk;
        for (const auto& f : files) {
            if (files.size() > 1) std::cout << "== " << f << "\n";
            try {
                solve_one(cfg, f, std::cout);
            } catch (const budget_exceeded& e) {
                std::cerr << "budget exceeded: " << e.what() << "\n";
                worst = std::max(worst, kExitBudget);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                worst = std::max(worst, kExitError);
            }
        }
        return worst;
    }
    // independent solver calls, buffered reports printed in input order
    std::vector<std::string> reports(files.size());
    std::vector<int> codes(files.size(), kExitOk);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    int jobs = std::min<int>(cfg.jobs, static_cast<int>(files.size()));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= files.size()) return;
                std::ostringstream os;
                try {
                    codes[i] = solve_one(cfg, files[i], os);
                } catch (const budget_exceeded& e) {
                    os << "budget exceeded: " << e.what() << "\n";
                    codes[i] = kExitBudget;
                } catch (const std::exception& e) {
                    os << "error: " << e.what() << "\n";
                    codes[i] = kExitError;
                }
                reports[i] = os.str();
            }
        });
    for (auto& th : pool) th.join();
    int worst = kExitOk;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::cout << "== " << files[i] << "\n" << reports[i];
        worst = std::max(worst, codes[i]);
    }
    return worst;
}

int run_verify(const std::string& graph_file, const std::string& coloring_file,
               const std::string& targets_file, const std::string& tree_file,
               const std::string& path_file, const std::string& expr_file,
               const std::string& against_file) {
    Graph g = read_graph_file(graph_file);
    bool ok = true;
    if (!coloring_file.empty()) {
        GrundyColoring c = coloring_from_json(slurp(coloring_file), g.vertex_count());
        Verdict v = verify_grundy(g, c);
        std::cout << verdict_to_json(v) << "\n";
        ok = v.valid;
        if (ok && !targets_file.empty()) {
            TargetSpec spec = targets_from_json(slurp(targets_file));
            bool hit = verify_targets(g, c, spec);
            std::cout << "targets " << (hit ? "achieved" : "missed") << "\n";
            ok = hit;
        }
    } else if (!tree_file.empty()) {
        TreeDecomposition d = tree_decomposition_from_string(slurp(tree_file));
        DecompVerdict v = verify_decomposition(g, d);
        std::cout << (v.valid ? "valid" : "invalid") << ", width " << v.width << "\n";
        for (const auto& viol : v.violations) std::cout << "  " << viol << "\n";
        ok = v.valid;
    } else if (!path_file.empty()) {
        PathDecomposition d = path_decomposition_from_string(slurp(path_file));
        DecompVerdict v = verify_decomposition(g, d);
        std::cout << (v.valid ? "valid" : "invalid") << ", width " << v.width << "\n";
        for (const auto& viol : v.violations) std::cout << "  " << viol << "\n";
        ok = v.valid;
    } else if (!expr_file.empty()) {
        CliquewidthExpression e = parse_cw_expression(slurp(expr_file));
        auto [built, labels] = eval_cw_expression(e);
        const Graph& ref = against_file.empty() ? g : read_graph_file(against_file);
        bool same = built.same_structure(ref);
        std::cout << "labels = " << labels << ", graph "
                  << (same ? "matches" : "differs") << "\n";
        ok = same;
    } else {
        throw std::invalid_argument("verify: nothing to check");
    }
    return ok ? kExitOk : kExitError;
}

nlohmann::ordered_json manifest_entry(const std::string& kind, const std::string& path) {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["path"] = path;
    return j;
}

int run_gen_mcc(int k, int n, const std::string& edges_file, const std::string& clique_arg,
                const std::string& prefix) {
    std::ifstream in(edges_file);
    if (!in) throw std::invalid_argument("cannot open edges file: " + edges_file);
    MccInstance inst = read_mcc_instance(in);
    if (k && k != inst.k) throw std::invalid_argument("--k disagrees with the edges file");
    if (n && n != inst.n) throw std::invalid_argument("--n disagrees with the edges file");

    MccArtifacts art = build_mcc_pipeline(inst);
    auto pd_verdict = verify_decomposition(art.out.gprime.induced_prefix(art.out.index.core_count),
                                           art.pd.pd);
    auto cert_verdict = verify_decomposition(art.fill.h, art.fill.certificate);
    if (!pd_verdict.valid || !cert_verdict.valid)
        throw std::logic_error("internal error: generated certificates do not verify");

    nlohmann::ordered_json manifest;
    manifest["family"] = "mcc";
    manifest["k"] = inst.k;
    manifest["n"] = inst.n;
    manifest["m"] = inst.m();
    manifest["target"] = art.out.targets.target;
    manifest["target_count"] = art.out.targets.vertices.size();
    manifest["threshold"] = art.out.threshold;
    manifest["gprime_pd_width"] = art.pd.pd.width();
    manifest["h_certificate_width"] = art.fill.certificate.width();
    auto files = nlohmann::ordered_json::array();

    spill(prefix + ".gprime.gr", graph_to_string(art.out.gprime));
    files.push_back(manifest_entry("gadget graph", prefix + ".gprime.gr"));
    spill(prefix + ".h.gr", graph_to_string(art.fill.h));
    files.push_back(manifest_entry("filled graph", prefix + ".h.gr"));
    spill(prefix + ".targets.json", targets_to_json(art.out.targets));
    files.push_back(manifest_entry("targets", prefix + ".targets.json"));
    spill(prefix + ".gpp.pd", path_decomposition_to_string(art.pd.pd));
    files.push_back(manifest_entry("stripped-graph path decomposition", prefix + ".gpp.pd"));
    spill(prefix + ".h.td", tree_decomposition_to_string(art.fill.certificate));
    files.push_back(manifest_entry("filled-graph tree decomposition", prefix + ".h.td"));

    if (!clique_arg.empty()) {
        std::vector<int> clique;
        std::istringstream cs(clique_arg);
        std::string tok;
        while (std::getline(cs, tok, ',')) clique.push_back(std::stoi(tok));
        GrundyColoring w = mcc_witness_coloring(art, clique);
        if (!verify_grundy(art.fill.h, w).valid || w.max_color != art.out.threshold)
            throw std::logic_error("internal error: witness coloring does not verify");
        spill(prefix + ".witness.json", coloring_to_json(w));
        files.push_back(manifest_entry("witness coloring", prefix + ".witness.json"));
    }
    manifest["files"] = files;
    spill(prefix + ".manifest.json", manifest.dump(2) + "\n");
    std::cout << "threshold = " << art.out.threshold << "\n";
    std::cout << "manifest = " << prefix << ".manifest.json\n";
    return kExitOk;
}

int run_gen_sat(const std::string& cnf_file, const std::string& assignment_arg,
                const std::string& prefix) {
    CnfFormula f = parse_dimacs_cnf_file(cnf_file);
    SatReduction red = build_sat_reduction(f);
    CliquewidthExpression expr = build_cw8_expression(f);
    auto [rebuilt, labels] = eval_cw_expression(expr);
    if (!rebuilt.same_structure(red.graph) || labels > 8)
        throw std::logic_error("internal error: expression round-trip failed");

    nlohmann::ordered_json manifest;
    manifest["family"] = "sat";
    manifest["variables"] = f.var_count;
    manifest["clauses"] = f.clauses.size();
    manifest["target"] = red.target;
    manifest["expression_labels"] = labels;
    auto files = nlohmann::ordered_json::array();
    spill(prefix + ".gr", graph_to_string(red.graph));
    files.push_back(manifest_entry("reduction graph", prefix + ".gr"));
    spill(prefix + ".cwx", cw_expression_to_string(expr));
    files.push_back(manifest_entry("clique-width expression", prefix + ".cwx"));

    if (!assignment_arg.empty()) {
        std::vector<bool> assignment;
        std::istringstream as(assignment_arg);
        std::string tok;
        while (std::getline(as, tok, ',')) assignment.push_back(std::stoi(tok) != 0);
        GrundyColoring w = sat_witness_coloring(red, assignment);
        if (!verify_grundy(red.graph, w).valid || w.max_color != red.target)
            throw std::logic_error("internal error: witness coloring does not verify");
        spill(prefix + ".witness.json", coloring_to_json(w));
        files.push_back(manifest_entry("witness coloring", prefix + ".witness.json"));
    }
    manifest["files"] = files;
    spill(prefix + ".manifest.json", manifest.dump(2) + "\n");
    std::cout << "target = " << red.target << "\n";
    std::cout << "manifest = " << prefix << ".manifest.json\n";
    return kExitOk;
}

int run_params(const std::string& graph_file, bool twins, bool modules) {
    Graph g = read_graph_file(graph_file);
    if (twins) {
        TwinPartition p = compute_twin_classes(g);
        std::cout << "twin classes: " << p.count() << "\n";
        for (int c = 0; c < p.count(); ++c) {
            const char* kind = p.kinds[c] == TwinPartition::Kind::TrueTwin    ? "true"
                               : p.kinds[c] == TwinPartition::Kind::FalseTwin ? "false"
                                                                              : "singleton";
            std::cout << "  class " << c << " (" << kind << ", size " << p.classes[c].size()
                      << "):";
            for (int v : p.classes[c]) std::cout << " " << v;
            std::cout << "\n";
        }
        std::cout << "quotient edges:";
        for (int a = 0; a < p.count(); ++a)
            for (int b : p.quotient[a])
                if (a < b) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
    }
    if (modules) {
        auto parts = modular_partition(g);
        std::cout << "modules: " << parts.size() << "\n";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::cout << "  module " << i << ":";
            for (int v : parts[i]) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_bench(const std::string& algo, int repeat, const std::string& graph_file) {
    SolveConfig cfg;
    cfg.algo = algo;
    long long best_us = -1;
    for (int r = 0; r < repeat; ++r) {
        std::ostringstream sink;
        auto start = std::chrono::steady_clock::now();
        solve_one(cfg, graph_file, sink);
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (best_us < 0 || us < best_us) best_us = us;
        std::cout << "run " << r << ": " << us / 1000.0 << " ms\n";
    }
    std::cout << "best: " << best_us / 1000.0 << " ms\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grundy number toolkit: width-parameterized solvers, certificate "
                 "verifiers and hard-instance generators"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "compute the Grundy number of graph files");
    SolveConfig solve_cfg;
    std::vector<std::string> solve_files;
    solve->add_option("--algo", solve_cfg.algo,
                      "auto|orderings|exact|tw|pw|nd|mw (default auto)");
    solve->add_option("--decomp", solve_cfg.decomp_file, "decomposition file for tw/pw");
    solve->add_option("--witness-out", solve_cfg.witness_out, "write a witness coloring here");
    solve->add_option("--jobs", solve_cfg.jobs, "solve multiple files concurrently");
    solve->add_flag("--heuristic-log-cap", solve_cfg.heuristic_log_cap,
                    "cap the scan at (tw+1)*ceil(log2(n+1)); heuristic, not sound");
    solve->add_option("files", solve_files, "graph files")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check colorings, certificates, expressions");
    std::string v_graph, v_coloring, v_targets, v_tree, v_path, v_expr, v_against;
    verify->add_option("--graph", v_graph, "graph file")->required();
    verify->add_option("--coloring", v_coloring, "coloring json");
    verify->add_option("--targets", v_targets, "targets json (with --coloring)");
    verify->add_option("--tree-decomp", v_tree, "tree decomposition file");
    verify->add_option("--path-decomp", v_path, "path decomposition file");
    verify->add_option("--expr", v_expr, "clique-width expression file");
    verify->add_option("--against", v_against, "compare the expression to this graph");

    // gen family
    auto* gen = app.add_subcommand("gen", "generate instances and artifacts");
    gen->require_subcommand(1);
    auto* g_binomial = gen->add_subcommand("binomial", "binomial tree");
    int gb_order = 1;
    std::string gb_out;
    g_binomial->add_option("--order,--i", gb_order, "tree order")->required();
    g_binomial->add_option("--out", gb_out, "output graph file")->required();
    auto* g_path = gen->add_subcommand("path", "path graph");
    int gp_n = 1;
    std::string gp_out;
    g_path->add_option("--n", gp_n)->required();
    g_path->add_option("--out", gp_out)->required();
    auto* g_cycle = gen->add_subcommand("cycle", "cycle graph");
    int gc_n = 3;
    std::string gc_out;
    g_cycle->add_option("--n", gc_n)->required();
    g_cycle->add_option("--out", gc_out)->required();
    auto* g_clique = gen->add_subcommand("clique", "complete graph");
    int gk_n = 1;
    std::string gk_out;
    g_clique->add_option("--n", gk_n)->required();
    g_clique->add_option("--out", gk_out)->required();
    auto* g_random = gen->add_subcommand("random", "G(n,p) graph");
    int gr_n = 1, gr_percent = 50;
    uint64_t gr_seed = 0;
    std::string gr_out;
    g_random->add_option("--n", gr_n)->required();
    g_random->add_option("--percent", gr_percent);
    g_random->add_option("--seed", gr_seed);
    g_random->add_option("--out", gr_out)->required();
    auto* g_cat = gen->add_subcommand("caterpillar", "caterpillar tree");
    int gcat_spine = 1, gcat_legs = 2;
    uint64_t gcat_seed = 0;
    std::string gcat_out;
    g_cat->add_option("--spine", gcat_spine)->required();
    g_cat->add_option("--legs", gcat_legs);
    g_cat->add_option("--seed", gcat_seed);
    g_cat->add_option("--out", gcat_out)->required();
    auto* g_cograph = gen->add_subcommand("cograph", "random cograph");
    int gco_n = 1, gco_branch = 3;
    uint64_t gco_seed = 0;
    std::string gco_out;
    g_cograph->add_option("--n", gco_n)->required();
    g_cograph->add_option("--branch", gco_branch);
    g_cograph->add_option("--seed", gco_seed);
    g_cograph->add_option("--out", gco_out)->required();
    auto* g_nd = gen->add_subcommand("ndquotient", "bounded twin-class blow-up");
    int gnd_classes = 2, gnd_max = 4;
    uint64_t gnd_seed = 0;
    std::string gnd_out;
    g_nd->add_option("--classes", gnd_classes)->required();
    g_nd->add_option("--max-size", gnd_max);
    g_nd->add_option("--seed", gnd_seed);
    g_nd->add_option("--out", gnd_out)->required();
    auto* g_mcc = gen->add_subcommand("mcc", "multicolored-clique reduction");
    int gm_k = 0, gm_n = 0;
    std::string gm_edges, gm_clique, gm_prefix;
    g_mcc->add_option("--k", gm_k, "parts (consistency check)");
    g_mcc->add_option("--n", gm_n, "part size (consistency check)");
    g_mcc->add_option("--edges-file", gm_edges, "instance file")->required();
    g_mcc->add_option("--clique", gm_clique, "comma-separated chosen vertex per part");
    g_mcc->add_option("--out-prefix", gm_prefix)->required();
    auto* g_sat = gen->add_subcommand("sat", "3-sat reduction");
    std::string gs_cnf, gs_assignment, gs_prefix;
    g_sat->add_option("--cnf-file", gs_cnf, "DIMACS cnf input")->required();
    g_sat->add_option("--assignment", gs_assignment, "comma-separated 0/1 per variable");
    g_sat->add_option("--out-prefix", gs_prefix)->required();

    // params
    auto* params = app.add_subcommand("params", "structural parameters of a graph");
    bool p_twins = false, p_modules = false;
    std::string p_graph;
    params->add_flag("--twins", p_twins, "twin classes and quotient");
    params->add_flag("--modules", p_modules, "top-level modular partition");
    params->add_option("file", p_graph, "graph file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "time a solver on a graph");
    std::string b_algo = "exact", b_graph;
    int b_repeat = 3;
    bench->add_option("--algo", b_algo);
    bench->add_option("--repeat", b_repeat);
    bench->add_option("file", b_graph)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(solve_cfg, solve_files);
        if (*verify) return run_verify(v_graph, v_coloring, v_targets, v_tree, v_path, v_expr,
                                       v_against);
        if (*g_binomial) {
            write_graph_file(gb_out, build_binomial_tree(gb_order).graph);
            return kExitOk;
        }
        if (*g_path) {
            write_graph_file(gp_out, path_graph(gp_n));
            return kExitOk;
        }
        if (*g_cycle) {
            write_graph_file(gc_out, cycle_graph(gc_n));
            return kExitOk;
        }
        if (*g_clique) {
            write_graph_file(gk_out, complete_graph(gk_n));
            return kExitOk;
        }
        if (*g_random) {
            write_graph_file(gr_out, random_graph(gr_n, gr_percent, gr_seed));
            return kExitOk;
        }
        if (*g_cat) {
            write_graph_file(gcat_out, caterpillar(gcat_spine, gcat_legs, gcat_seed));
            return kExitOk;
        }
        if (*g_cograph) {
            write_graph_file(gco_out, random_cograph(gco_n, gco_branch, gco_seed));
            return kExitOk;
        }
        if (*g_nd) {
            write_graph_file(gnd_out, random_bounded_nd(gnd_classes, gnd_max, gnd_seed));
            return kExitOk;
        }
        if (*g_mcc) return run_gen_mcc(gm_k, gm_n, gm_edges, gm_clique, gm_prefix);
        if (*g_sat) return run_gen_sat(gs_cnf, gs_assignment, gs_prefix);
        if (*params) return run_params(p_graph, p_twins, p_modules);
        if (*bench) return run_bench(b_algo, b_repeat, b_graph);
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
