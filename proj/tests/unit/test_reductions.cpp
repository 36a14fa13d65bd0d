#include <doctest.h>

#include "grundy/coloring.hpp"
#include "grundy/errors.hpp"
#include "grundy/graph.hpp"
#include "grundy/reductions.hpp"

#include "helpers.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

using namespace grundy;

namespace {

MccInstance mcc_k2_single_edge() {
    MccInstance inst;
    inst.k = 2;
    inst.n = 2;
    inst.edges = {{0, 0, 1, 0}};
    return inst;
}

MccInstance mcc_k3_triangle() {
    MccInstance inst;
    inst.k = 3;
    inst.n = 2;
    inst.edges = {{0, 0, 1, 0}, {0, 0, 2, 0}, {1, 0, 2, 0}};
    return inst;
}

CnfFormula phi_one_clause() {
    CnfFormula f;
    f.var_count = 3;
    f.clauses.push_back({{1, -2, 3}});
    return f;
}

// all eight sign patterns over three variables: unsatisfiable
CnfFormula phi_all_signs() {
    CnfFormula f;
    f.var_count = 3;
    for (int s = 0; s < 8; ++s) {
        CnfClause cl;
        for (int q = 0; q < 3; ++q) cl.lits[q] = (s >> q) & 1 ? (q + 1) : -(q + 1);
        f.clauses.push_back(cl);
    }
    return f;
}

} // namespace

TEST_CASE("mcc instance validation") {
    MccInstance bad = mcc_k2_single_edge();
    bad.n = 3;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument); // not a power of two
    bad = mcc_k2_single_edge();
    bad.edges.push_back(bad.edges[0]);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument); // duplicate
    bad = mcc_k2_single_edge();
    bad.edges[0].part_b = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument); // intra-part
}

TEST_CASE("mcc thresholds per the counting formula") {
    CHECK(mcc_threshold(2, 2, 1) == 10);
    CHECK(mcc_threshold(3, 2, 3) == 12);
    CHECK(mcc_threshold(2, 4, 1) == 12);
}

TEST_CASE("mcc reduction: targets, degrees, gadget structure") {
    ReductionOutput out = build_mcc_reduction(mcc_k2_single_edge());
    const int L = 1, t = 2 * L + 4;
    CHECK(out.targets.target == t);
    CHECK(out.targets.vertices.size() == 7); // k(m+1) + C(k,2) + 2m = 4+1+2
    CHECK(out.threshold == 10);

    ReductionOutput big = build_mcc_reduction(mcc_k3_triangle());
    CHECK(big.targets.vertices.size() == 21); // 3*4 + 3 + 6
    CHECK(big.targets.target == 6);
    CHECK(big.threshold == 12);

    // propagators: 2 log n + 3 neighbors (2 log n gadget + 3 supports)
    const GadgetIndex& ix = big.index;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= 3; ++j) CHECK(big.gprime.degree(ix.p[i][j]) == 2 * L + 3);
    // checkers: degree 2 log n + 3 (supports plus the checked vertex)
    for (int e = 0; e < 3; ++e) {
        CHECK(big.gprime.degree(ix.wp_x[e]) == 2 * L + 3);
        CHECK(big.gprime.degree(ix.wp_y[e]) == 2 * L + 3);
        CHECK(big.gprime.degree(ix.w_x[e]) == 2 * L + 4);
        CHECK(big.gprime.degree(ix.w_y[e]) == 2 * L + 4);
    }
    // validators: supports [2logn+2] plus both w vertices of each pair edge
    for (const auto& [a, b, q] : ix.validators) CHECK(big.gprime.degree(q) == 2 * L + 2 + 2);
}

TEST_CASE("selection pairs with their supports induce binomial trees") {
    // needs log n >= 2 for non-trivial supports
    MccInstance inst;
    inst.k = 2;
    inst.n = 4;
    inst.edges = {{0, 1, 1, 2}};
    ReductionOutput out = build_mcc_reduction(inst);
    const GadgetIndex& ix = out.index;
    const int L = 2;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int l = 1; l <= L; ++l) {
                std::vector<int> block{ix.s[i][j][2 * l - 2], ix.s[i][j][2 * l - 1]};
                for (const auto& rec : ix.supports)
                    if (rec.supported == block[0] || rec.supported == block[1])
                        for (int off = 0; off < binomial_size(rec.order); ++off)
                            block.push_back(rec.base + off);
                Graph induced = out.gprime.induced(block);
                CHECK(induced.is_tree());
                CHECK(test_helpers::trees_isomorphic(induced,
                                                     build_binomial_tree(2 * l).graph));
            }
}

TEST_CASE("gprime path decomposition: valid with the stated width") {
    for (const MccInstance& inst : {mcc_k2_single_edge(), mcc_k3_triangle()}) {
        ReductionOutput out = build_mcc_reduction(inst);
        GprimePathDecomposition gp = build_gprime_path_decomposition(out);
        Graph stripped = out.gprime.induced_prefix(out.index.core_count);
        DecompVerdict v = verify_decomposition(stripped, gp.pd);
        CHECK(v.valid);
        int k = inst.k;
        CHECK(v.width <= k * (k - 1) / 2 + 2 * k + 3);
        // one important bag per target, aligned and increasing
        REQUIRE(gp.important_bag.size() == out.target_order.size());
        for (std::size_t i = 0; i < gp.important_bag.size(); ++i) {
            const auto& bag = gp.pd.bags[gp.important_bag[i]];
            CHECK(std::find(bag.begin(), bag.end(), out.target_order[i]) != bag.end());
            if (i > 0) CHECK(gp.important_bag[i] > gp.important_bag[i - 1]);
        }
    }
}

TEST_CASE("tree filling on a tiny custom instance") {
    // |S| = 1, t = 2: the added tree has order 3 with one slot replaced
    Graph g = path_graph(3);
    TargetSpec spec{{1}, 2};
    PathDecomposition pd{{{0, 1}, {1, 2}}};
    FillResult fr = tree_filling(g, spec, {1}, pd, {0}, {});
    CHECK(fr.fill_order == 3);
    // the order-3 tree has 4 vertices; the replaced order-2 slot contributes
    // the target itself, so 2 fresh vertices are added
    CHECK(fr.h.vertex_count() == 3 + 2);
    CHECK(fr.h.has_edge(fr.fill_root, 1));
    CHECK(verify_decomposition(fr.h, fr.certificate).valid);
    CHECK(fr.certificate.width() <= 4 * pd.width() + 5);

    // |S| = 7, t = 6 -> order 10
    Graph g7 = path_graph(7);
    PathDecomposition pd7;
    std::vector<int> order7, imp7;
    for (int v = 0; v < 7; ++v) {
        pd7.bags.push_back(v == 0 ? std::vector<int>{0} : std::vector<int>{v - 1, v});
        order7.push_back(v);
        imp7.push_back(v);
    }
    FillResult fr7 = tree_filling(g7, TargetSpec{order7, 6}, order7, pd7, imp7, {});
    CHECK(fr7.fill_order == 10);
    CHECK(verify_decomposition(fr7.h, fr7.certificate).valid);
    CHECK(fr7.certificate.width() <= 4 * pd7.width() + 5);

    // important bag that misses its target
    CHECK_THROWS_AS(tree_filling(g, TargetSpec{{0}, 2}, {0}, pd, {1}, {}),
                    std::invalid_argument);
}

TEST_CASE("mcc pipeline: certificates verify at the stated widths") {
    for (const MccInstance& inst : {mcc_k2_single_edge(), mcc_k3_triangle()}) {
        MccArtifacts art = build_mcc_pipeline(inst);
        DecompVerdict v = verify_decomposition(art.fill.h, art.fill.certificate);
        CHECK(v.valid);
        CHECK(v.width <= 4 * art.pd.pd.width() + 5);
    }
}

TEST_CASE("mcc witness colorings verify and reach the threshold") {
    MccArtifacts small = build_mcc_pipeline(mcc_k2_single_edge());
    GrundyColoring w = mcc_witness_coloring(small, {0, 0});
    CHECK(verify_grundy(small.fill.h, w).valid);
    CHECK(w.max_color == 10);
    CHECK(verify_targets(small.fill.h, w, small.out.targets));

    MccArtifacts tri = build_mcc_pipeline(mcc_k3_triangle());
    GrundyColoring w3 = mcc_witness_coloring(tri, {0, 0, 0});
    CHECK(verify_grundy(tri.fill.h, w3).valid);
    CHECK(w3.max_color == 12);
    CHECK(verify_targets(tri.fill.h, w3, tri.out.targets));

    // propagator neighbors carry every color below the target
    const GadgetIndex& ix = tri.out.index;
    const int t = tri.out.targets.target;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            std::set<int> seen;
            for (int nb : tri.fill.h.neighbors(ix.p[i][j])) seen.insert(w3.colors[nb]);
            for (int c = 1; c < t; ++c) CHECK(seen.count(c) == 1);
        }

    // an invalid clique is rejected
    CHECK_THROWS_AS(mcc_witness_coloring(tri, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("mcc filled graph never exceeds its threshold under first-fit probes") {
    MccArtifacts art = build_mcc_pipeline(mcc_k2_single_edge());
    CHECK(first_fit_search(art.fill.h, 2000, 424242) <= art.out.threshold);
}

TEST_CASE("mcc instance text format round-trips") {
    MccInstance inst = mcc_k3_triangle();
    std::string text = mcc_instance_to_string(inst);
    std::istringstream in(text);
    MccInstance back = read_mcc_instance(in);
    CHECK(back.k == inst.k);
    CHECK(back.n == inst.n);
    CHECK(back.m() == inst.m());
}

TEST_CASE("cnf parsing and validation") {
    std::istringstream in("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CnfFormula f = parse_dimacs_cnf(in);
    CHECK(f.var_count == 3);
    CHECK(f.clauses.size() == 2);

    std::istringstream dup("p cnf 3 1\n1 -1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs_cnf(dup), std::invalid_argument);
    std::istringstream two("p cnf 3 1\n1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs_cnf(two), std::invalid_argument);
}

TEST_CASE("sat reduction: targets and the degree of u") {
    SatReduction red = build_sat_reduction(phi_one_clause());
    CHECK(red.target == 41);
    CHECK(red.graph.degree(red.index.u) == 40);

    SatReduction unsat = build_sat_reduction(phi_all_signs());
    CHECK(unsat.target == 111);
    CHECK(unsat.graph.degree(unsat.index.u) == 110);

    // literal wiring: x_{i,j} is adjacent to the whole chosen row
    const SatIndex& ix = red.index;
    for (int ip = 0; ip < 3; ++ip) {
        CHECK(red.graph.has_edge(ix.literals[0][0], ix.xp[ip])); // x1 positive
        CHECK(red.graph.has_edge(ix.literals[0][1], ix.xn[ip])); // x2 negative
        CHECK(red.graph.has_edge(ix.literals[0][2], ix.xp[ip])); // x3 positive
    }
}

TEST_CASE("sat witness colorings") {
    SatReduction red = build_sat_reduction(phi_one_clause());
    GrundyColoring w = sat_witness_coloring(red, {true, true, true});
    CHECK(verify_grundy(red.graph, w).valid);
    CHECK(w.max_color == 41);

    // u's d-neighbors cover exactly the colors 2n+4+j
    const SatIndex& ix = red.index;
    CHECK(w.colors[ix.d[0]] == 2 * 3 + 4 + 1);

    // two clauses over three variables: 10*3 + 10*2 + 1
    CnfFormula f2 = phi_one_clause();
    f2.clauses.push_back({{-1, 2, -3}});
    SatReduction red2 = build_sat_reduction(f2);
    CHECK(red2.target == 51);
    GrundyColoring w2 = sat_witness_coloring(red2, {true, true, true});
    CHECK(verify_grundy(red2.graph, w2).valid);
    CHECK(w2.max_color == 51);
    for (int j = 0; j < 2; ++j) CHECK(w2.colors[red2.index.d[j]] == 2 * 3 + 4 + j + 1);

    // every satisfying assignment of the single clause yields a witness
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<bool> assignment{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
        bool satisfies = assignment[0] || !assignment[1] || assignment[2];
        if (!satisfies) {
            CHECK_THROWS_AS(sat_witness_coloring(red, assignment), std::invalid_argument);
            continue;
        }
        GrundyColoring wm = sat_witness_coloring(red, assignment);
        CHECK(verify_grundy(red.graph, wm).valid);
        CHECK(wm.max_color == 41);
    }
}

TEST_CASE("clique-width expression round-trips to the reduction graph") {
    CnfFormula three = phi_one_clause();
    three.clauses.push_back({{-1, 2, -3}});
    three.clauses.push_back({{1, 2, 3}});
    for (CnfFormula f : {phi_one_clause(), three, phi_all_signs()}) {
        SatReduction red = build_sat_reduction(f);
        CliquewidthExpression expr = build_cw8_expression(f);
        auto [g, labels] = eval_cw_expression(expr);
        CHECK(labels <= 8);
        CHECK(g.same_structure(red.graph));
        CHECK(!expr.label_joined(0)); // junk label never joined
        // and the printed form parses back to the same graph
        auto [g2, labels2] = eval_cw_expression(parse_cw_expression(cw_expression_to_string(expr)));
        CHECK(g2.same_structure(red.graph));
        CHECK(labels2 == labels);
    }
}
