// Acceptance suite: one pass/fail line per criterion, non-zero exit if any
// criterion fails. Every tolerance is pinned here in code.

#include "grundy/binomial.hpp"
#include "grundy/cliquewidth.hpp"
#include "grundy/coloring.hpp"
#include "grundy/decomposition.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph.hpp"
#include "grundy/reductions.hpp"
#include "grundy/solver_dp.hpp"
#include "grundy/solver_modular.hpp"

#include "../unit/helpers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace grundy;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %2d [%s] %s%s\n", number, pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ("  -- " + detail).c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

Graph labeled_graph(int n, unsigned mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1u << bit)) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------- criterion 1

void criterion_oracle_agreement() {
    auto start = std::chrono::steady_clock::now();
    int mismatches = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g = labeled_graph(4, mask);
        if (gamma_orderings(g) != gamma_exact(g)) ++mismatches;
    }
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + trial % 3;
        Graph g = random_graph(n, 20 + trial % 60, 101 + trial);
        if (gamma_orderings(g) != gamma_exact(g)) ++mismatches;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << mismatches << " mismatches, " << secs << " s";
    report(1, "orderings oracle == subset-recursion oracle (264 graphs, <60 s)",
           mismatches == 0 && secs < 60.0, detail.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion_binomial_trees() {
    bool ok = true;
    std::ostringstream detail;
    for (int i = 1; i <= 4; ++i) {
        RootedTree t = build_binomial_tree(i);
        if (gamma_exact(t.graph) != i) {
            ok = false;
            detail << "gamma_exact(T_" << i << ") != " << i << "; ";
        }
    }
    for (int i = 1; i <= 6; ++i) {
        RootedTree t = build_binomial_tree(i);
        if (gamma_tw(t.graph, decomposition_of_tree(t.graph)) != i) {
            ok = false;
            detail << "gamma_tw(T_" << i << ") != " << i << "; ";
        }
    }
    for (int i = 1; i <= 5; ++i) {
        RootedTree t = build_binomial_tree(i);
        for (int j = 1; j <= i; ++j) {
            std::vector<int> col = binomial_coloring(i, j);
            GrundyColoring c;
            c.colors = col;
            c.max_color = *std::max_element(col.begin(), col.end());
            if (col[t.root] != j || !verify_grundy(t.graph, c).valid) {
                ok = false;
                detail << "root coloring (" << i << "," << j << ") invalid; ";
            }
        }
    }
    report(2, "binomial trees: gamma == order, all sub-optimal root colorings verify", ok,
           detail.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion_subtree_counts() {
    bool ok = true;
    std::ostringstream detail;
    for (int i = 2; i <= 7; ++i) {
        RootedTree t = build_binomial_tree(i);
        for (int small = 1; small < i; ++small) {
            auto sets = find_disjoint_subtrees(i, small);
            if (static_cast<int>(sets.size()) != (1 << (i - small - 1))) {
                ok = false;
                detail << "count (" << i << "," << small << "); ";
                continue;
            }
            Graph reference = build_binomial_tree(small).graph;
            std::vector<char> used(t.graph.vertex_count(), 0);
            for (const auto& ids : sets) {
                for (int v : ids) {
                    if (v == t.root || used[v]) ok = false;
                    used[v] = 1;
                }
                Graph sub = t.graph.induced(ids);
                if (!sub.is_tree() || !test_helpers::trees_isomorphic(sub, reference)) {
                    ok = false;
                    detail << "shape (" << i << "," << small << "); ";
                }
            }
            for (std::size_t a = 0; a < sets.size(); ++a)
                for (std::size_t b = a + 1; b < sets.size(); ++b)
                    for (int u : sets[a])
                        for (int v : sets[b])
                            if (t.graph.has_edge(u, v)) ok = false;
        }
    }
    report(3, "disjoint subtree counts 2^(i-t-1), verified copies, 1<=t<i<=7", ok, detail.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion_dp_equivalence() {
    auto start = std::chrono::steady_clock::now();
    int mismatches = 0, produced = 0;
    uint64_t seed = 4000;
    while (produced < 100) {
        ++seed;
        int n = 6 + static_cast<int>(seed % 7); // 6..12
        Graph g = random_graph(n, 18 + static_cast<int>(seed % 25), seed);
        auto [tw, tcert] = exact_treewidth(g);
        if (tw > 4) continue; // family restricted to treewidth <= 4
        ++produced;
        auto [pw, pcert] = exact_pathwidth(g);
        int expected = gamma_exact(g);
        if (gamma_tw(g, tcert) != expected) ++mismatches;
        if (gamma_pw(g, pcert) != expected) ++mismatches;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << mismatches << " mismatches, " << secs << " s";
    report(4, "tw/pw dynamic programs == exact oracle (100 graphs n<=12, <600 s)",
           mismatches == 0 && secs < 600.0, detail.str());
}

// ---------------------------------------------------------------- criterion 5

void criterion_pathwidth_cap() {
    bool ok = true;
    std::ostringstream detail;
    std::vector<Graph> corpus;
    for (int n = 1; n <= 10; ++n) corpus.push_back(path_graph(n));
    for (int n = 3; n <= 10; ++n) corpus.push_back(cycle_graph(n));
    for (int n = 1; n <= 10; ++n) corpus.push_back(complete_graph(n));
    for (int i = 1; i <= 4; ++i) corpus.push_back(build_binomial_tree(i).graph);
    for (int a = 1; a <= 5; ++a) corpus.push_back(complete_bipartite(a, 10 - a));
    for (int t = 0; t < 30; ++t) corpus.push_back(random_graph(4 + t % 7, 20 + t * 2, 500 + t));
    for (int t = 0; t < 10; ++t) {
        Graph cat = caterpillar(4, 1, 71 + t);
        if (cat.vertex_count() <= 10) corpus.push_back(cat);
    }
    int checked = 0;
    for (const Graph& g : corpus) {
        if (g.vertex_count() > 10 || g.vertex_count() == 0) continue;
        ++checked;
        int pw = exact_pathwidth(g).first;
        int gamma = gamma_exact(g);
        if (gamma > 8 * (pw + 1)) {
            ok = false;
            detail << "violation at n=" << g.vertex_count() << " pw=" << pw
                   << " gamma=" << gamma << "; ";
        }
    }
    detail << checked << " graphs checked";
    report(5, "gamma <= 8*(pw+1) on the full exact-pathwidth corpus (n<=10)", ok, detail.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion_modular_solvers() {
    int mismatches = 0;
    std::ostringstream detail;
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_bounded_nd(1 + trial % 4, 4, 6000 + trial);
        if (g.vertex_count() > 16) continue;
        NdResult r = gamma_nd(g);
        int expected = gamma_exact(g);
        if (r.gamma != expected || (g.vertex_count() > 0 && !verify_grundy(g, r.coloring).valid))
            ++mismatches;
    }
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_cograph(2 + trial % 15, 3, 7000 + trial);
        if (gamma_mw(g) != gamma_exact(g)) ++mismatches;
    }
    int replacements = 0;
    for (uint64_t seed = 8000; replacements < 50; ++seed) {
        PlantedModule pm = random_planted_module(4 + seed % 4, 2 + seed % 4, seed);
        const Graph& g = pm.graph;
        if (g.vertex_count() > 14) continue;
        ++replacements;
        int before = gamma_exact(g);
        int inner = gamma_exact(g.induced(pm.module));
        Graph h;
        std::vector<char> in_module(g.vertex_count(), 0);
        for (int v : pm.module) in_module[v] = 1;
        std::vector<int> clique_ids, outer_ids(g.vertex_count(), -1);
        for (int q = 0; q < inner; ++q) clique_ids.push_back(h.add_vertex());
        for (std::size_t a = 0; a < clique_ids.size(); ++a)
            for (std::size_t b = a + 1; b < clique_ids.size(); ++b)
                h.add_edge(clique_ids[a], clique_ids[b]);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_module[v]) outer_ids[v] = h.add_vertex();
        for (auto [u, v] : g.edges())
            if (!in_module[u] && !in_module[v]) h.add_edge(outer_ids[u], outer_ids[v]);
        int probe = pm.module[0];
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (in_module[v] || !g.has_edge(probe, v)) continue;
            for (int cid : clique_ids) h.add_edge(cid, outer_ids[v]);
        }
        if (gamma_exact(h) != before) ++mismatches;
    }
    detail << mismatches << " mismatches";
    report(6, "gamma_nd / gamma_mw == exact oracle; module replacement preserves gamma",
           mismatches == 0, detail.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion_mcc_yes_side() {
    bool ok = true;
    std::ostringstream detail;
    // k=2, n=2: every non-empty edge set; the witness clique is the first edge
    for (unsigned mask = 1; mask < 16; ++mask) {
        MccInstance inst;
        inst.k = 2;
        inst.n = 2;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                if (mask & (1u << (2 * x + y))) inst.edges.push_back({0, x, 1, y});
        MccArtifacts art = build_mcc_pipeline(inst);
        std::vector<int> clique{inst.edges[0].idx_a, inst.edges[0].idx_b};
        GrundyColoring w = mcc_witness_coloring(art, clique);
        int expected_threshold = mcc_threshold(2, 2, inst.m());
        if (!verify_grundy(art.fill.h, w).valid) {
            ok = false;
            detail << "witness invalid (mask " << mask << "); ";
            continue;
        }
        if (!verify_targets(art.fill.h, w, art.out.targets)) {
            ok = false;
            detail << "targets missed (mask " << mask << "); ";
        }
        if (w.max_color != expected_threshold || (inst.m() == 1 && expected_threshold != 10)) {
            ok = false;
            detail << "threshold (mask " << mask << "); ";
        }
        Graph stripped = art.out.gprime.induced_prefix(art.out.index.core_count);
        DecompVerdict pv = verify_decomposition(stripped, art.pd.pd);
        DecompVerdict tv = verify_decomposition(art.fill.h, art.fill.certificate);
        if (!pv.valid || pv.width > 1 + 4 + 3) {
            ok = false;
            detail << "pd width " << pv.width << " (mask " << mask << "); ";
        }
        if (!tv.valid || tv.width > 4 * pv.width + 5) {
            ok = false;
            detail << "certificate width (mask " << mask << "); ";
        }
    }
    // k=3, n=2 with a planted triangle
    MccInstance tri;
    tri.k = 3;
    tri.n = 2;
    tri.edges = {{0, 0, 1, 0}, {0, 0, 2, 0}, {1, 0, 2, 0}};
    MccArtifacts art = build_mcc_pipeline(tri);
    GrundyColoring w = mcc_witness_coloring(art, {0, 0, 0});
    if (!verify_grundy(art.fill.h, w).valid || w.max_color != 12 ||
        !verify_targets(art.fill.h, w, art.out.targets) || art.out.targets.target != 6 ||
        art.out.targets.vertices.size() != 21) {
        ok = false;
        detail << "triangle instance; ";
    }
    Graph stripped = art.out.gprime.induced_prefix(art.out.index.core_count);
    DecompVerdict pv = verify_decomposition(stripped, art.pd.pd);
    DecompVerdict tv = verify_decomposition(art.fill.h, art.fill.certificate);
    if (!pv.valid || pv.width > 3 + 6 + 3 || !tv.valid || tv.width > 4 * pv.width + 5) {
        ok = false;
        detail << "triangle certificates; ";
    }
    report(7, "mcc yes side: witnesses reach the threshold, certificates at stated widths", ok,
           detail.str());
}

// ---------------------------------------------------------------- criterion 8

void criterion_mcc_no_side() {
    // bounded probabilistic evidence only: 10^4 seeded orderings must stay
    // below the threshold on triangle-free instances
    bool ok = true;
    std::ostringstream detail;
    std::vector<MccInstance> family;
    {
        // six-cycle across the three parts: every pair of parts joined, no
        // triangle
        MccInstance inst;
        inst.k = 3;
        inst.n = 2;
        inst.edges = {{0, 0, 1, 0}, {1, 0, 2, 0}, {0, 1, 2, 0},
                      {0, 1, 1, 1}, {1, 1, 2, 1}, {0, 0, 2, 1}};
        family.push_back(inst);
    }
    {
        // bipartite-only edges: no triangle at all
        MccInstance inst;
        inst.k = 3;
        inst.n = 2;
        inst.edges = {{0, 0, 1, 0}, {0, 0, 1, 1}, {1, 0, 2, 0}, {1, 1, 2, 1}};
        family.push_back(inst);
    }
    for (std::size_t fi = 0; fi < family.size(); ++fi) {
        MccArtifacts art = build_mcc_pipeline(family[fi]);
        int found = first_fit_search(art.fill.h, 10000, 987654321 + fi);
        if (found >= art.out.threshold) {
            ok = false;
            detail << "instance " << fi << " reached " << found << "/" << art.out.threshold
                   << "; ";
        }
    }
    report(8, "mcc no side: 10^4 seeded first-fit runs stay below the threshold "
              "(probabilistic evidence)",
           ok, detail.str());
}

// ---------------------------------------------------------------- criterion 9

void criterion_sat_reduction() {
    bool ok = true;
    std::ostringstream detail;

    CnfFormula phi1;
    phi1.var_count = 3;
    phi1.clauses.push_back({{1, -2, 3}});
    SatReduction red1 = build_sat_reduction(phi1);
    GrundyColoring w1 = sat_witness_coloring(red1, {true, true, true});
    if (red1.target != 41 || !verify_grundy(red1.graph, w1).valid || w1.max_color != 41) {
        ok = false;
        detail << "single clause witness; ";
    }

    CnfFormula phi8;
    phi8.var_count = 3;
    for (int s = 0; s < 8; ++s) {
        CnfClause cl;
        for (int q = 0; q < 3; ++q) cl.lits[q] = (s >> q) & 1 ? (q + 1) : -(q + 1);
        phi8.clauses.push_back(cl);
    }
    SatReduction red8 = build_sat_reduction(phi8);
    if (red8.target != 111) {
        ok = false;
        detail << "unsat target; ";
    }
    // 10^4 seeded runs double as the degree-bound probe (<= target) and the
    // unsatisfiable no-side probe (< target)
    int probe8 = first_fit_search(red8.graph, 10000, 24680);
    if (probe8 >= 111) {
        ok = false;
        detail << "unsat formula reached " << probe8 << "; ";
    }
    int probe1 = first_fit_search(red1.graph, 10000, 1357);
    if (probe1 > red1.target) {
        ok = false;
        detail << "first-fit exceeded the target; ";
    }

    for (const CnfFormula* f : {&phi1, &phi8}) {
        SatReduction red = build_sat_reduction(*f);
        CliquewidthExpression expr = build_cw8_expression(*f);
        auto [g, labels] = eval_cw_expression(expr);
        if (labels > 8 || !g.same_structure(red.graph) || expr.label_joined(0)) {
            ok = false;
            detail << "expression round-trip; ";
        }
    }
    report(9, "sat reduction: witness at 10n+10m+1, unsat probe below, cw8 round-trip", ok,
           detail.str());
}

// ---------------------------------------------------------------- criterion 10

void criterion_determinism() {
    bool ok = true;
    std::ostringstream detail;
    auto twice = [&](const std::string& name, const std::function<std::string()>& run) {
        if (run() != run()) {
            ok = false;
            detail << name << " differs; ";
        }
    };
    twice("binomial", [] { return graph_to_string(build_binomial_tree(6).graph); });
    twice("caterpillar", [] { return graph_to_string(caterpillar(8, 3, 42)); });
    twice("cograph", [] { return graph_to_string(random_cograph(12, 3, 42)); });
    twice("ndquotient", [] { return graph_to_string(random_bounded_nd(4, 4, 42)); });
    twice("random", [] { return graph_to_string(random_graph(12, 40, 42)); });
    twice("mcc pipeline", [] {
        MccInstance inst;
        inst.k = 2;
        inst.n = 2;
        inst.edges = {{0, 0, 1, 0}};
        MccArtifacts art = build_mcc_pipeline(inst);
        return graph_to_string(art.fill.h) + path_decomposition_to_string(art.pd.pd) +
               tree_decomposition_to_string(art.fill.certificate) +
               coloring_to_json(mcc_witness_coloring(art, {0, 0}));
    });
    twice("sat pipeline", [] {
        CnfFormula f;
        f.var_count = 3;
        f.clauses.push_back({{1, -2, 3}});
        SatReduction red = build_sat_reduction(f);
        return graph_to_string(red.graph) + cw_expression_to_string(build_cw8_expression(f)) +
               coloring_to_json(sat_witness_coloring(red, {true, false, true}));
    });
    twice("solver outputs", [] {
        Graph g = random_graph(10, 35, 77);
        Graph nd_graph = random_bounded_nd(4, 4, 77);
        std::ostringstream os;
        os << gamma_exact(g) << "/" << coloring_to_json(gamma_exact_witness(g)) << "/"
           << gamma_nd(nd_graph).gamma << "/" << coloring_to_json(gamma_nd(nd_graph).coloring)
           << "/" << gamma_tw(g, exact_treewidth(g).second) << "/"
           << first_fit_search(g, 100, 5);
        return os.str();
    });
    report(10, "generators and solvers are byte-identical across two runs", ok, detail.str());
}

} // namespace

int main() {
    criterion_oracle_agreement();
    criterion_binomial_trees();
    criterion_subtree_counts();
    criterion_dp_equivalence();
    criterion_pathwidth_cap();
    criterion_modular_solvers();
    criterion_mcc_yes_side();
    criterion_mcc_no_side();
    criterion_sat_reduction();
    criterion_determinism();
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
