#include <doctest.h>

#include "grundy/binomial.hpp"
#include "grundy/coloring.hpp"
#include "grundy/errors.hpp"
#include "grundy/generators.hpp"
#include "grundy/graph.hpp"

#include "helpers.hpp"

#include <stdexcept>

using namespace grundy;

TEST_CASE("first fit on a path, hand-simulated order") {
    // path a-b-c-d as 0-1-2-3, order (d,a,b,c)
    Graph g = path_graph(4);
    GrundyColoring c = first_fit(g, {3, 0, 1, 2});
    CHECK(c.colors == std::vector<int>{1, 2, 3, 1});
    CHECK(c.max_color == 3);
    CHECK(verify_grundy(g, c).valid);
}

TEST_CASE("first fit basics") {
    Graph k3 = complete_graph(3);
    GrundyColoring c = first_fit(k3, {1, 2, 0});
    CHECK(c.max_color == 3);

    Graph e4 = empty_graph(4);
    c = first_fit(e4, {2, 0, 3, 1});
    CHECK(c.max_color == 1);

    CHECK_THROWS_AS(first_fit(k3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(first_fit(k3, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("verify_grundy catches the named violations") {
    // path a-b-c with a=1, c=2, b=3: c has no neighbor colored 1
    Graph g = path_graph(3);
    GrundyColoring c;
    c.colors = {1, 3, 2};
    c.max_color = 3;
    Verdict v = verify_grundy(g, c);
    CHECK(!v.valid);
    bool found = false;
    for (const auto& viol : v.violations)
        if (viol.kind == "missing-color" && viol.vertex_a == 2 && viol.color == 1) found = true;
    CHECK(found);

    GrundyColoring ok;
    ok.colors = {1, 2};
    ok.max_color = 2;
    CHECK(verify_grundy(complete_graph(2), ok).valid);

    GrundyColoring improper;
    improper.colors = {1, 1};
    improper.max_color = 1;
    Verdict v2 = verify_grundy(complete_graph(2), improper);
    CHECK(!v2.valid);
    CHECK(v2.violations.front().kind == "improper-edge");

    GrundyColoring hole; // color 2 skipped entirely
    hole.colors = {1, 3, 1};
    hole.max_color = 3;
    Verdict v3 = verify_grundy(empty_graph(3), hole);
    CHECK(!v3.valid);
}

TEST_CASE("first fit always produces a valid grundy coloring") {
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_graph(5 + trial % 26, 30 + trial % 40, 1000 + trial);
        auto order = random_permutation(g.vertex_count(), 77 * trial + 3);
        CHECK(verify_grundy(g, first_fit(g, order)).valid);
    }
}

TEST_CASE("verify_targets") {
    Graph k2 = complete_graph(2);
    GrundyColoring c;
    c.colors = {1, 2};
    c.max_color = 2;
    CHECK(verify_targets(k2, c, TargetSpec{{1}, 2}));
    CHECK(!verify_targets(k2, c, TargetSpec{{1}, 3}));
    GrundyColoring bad;
    bad.colors = {1, 1};
    bad.max_color = 1;
    CHECK_THROWS_AS(verify_targets(k2, bad, TargetSpec{{1}, 1}), std::invalid_argument);
}

TEST_CASE("gamma by orderings on the named small graphs") {
    CHECK(gamma_orderings(path_graph(4)) == 3);
    CHECK(gamma_orderings(cycle_graph(4)) == 2);
    CHECK(gamma_orderings(complete_graph(4)) == 4);
    CHECK_THROWS_AS(gamma_orderings(empty_graph(10)), budget_exceeded);
}

TEST_CASE("gamma_exact basics and binomial trees") {
    CHECK(gamma_exact(empty_graph(0)) == 0);
    CHECK(gamma_exact(empty_graph(5)) == 1);
    CHECK(gamma_exact(path_graph(4)) == 3);
    Graph t4 = grundy::build_binomial_tree(4).graph;
    CHECK(gamma_exact(t4) == 4);
    CHECK_THROWS_AS(gamma_exact(empty_graph(19)), budget_exceeded);
}

TEST_CASE("exact and orderings agree on all labeled 4-vertex graphs") {
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g = test_helpers::labeled_graph(4, mask);
        CHECK(gamma_orderings(g) == gamma_exact(g));
    }
}

TEST_CASE("gamma_exact witness verifies and matches") {
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(4 + trial % 7, 40, 500 + trial);
        GrundyColoring w = gamma_exact_witness(g);
        CHECK(w.max_color == gamma_exact(g));
        if (g.vertex_count() > 0) CHECK(verify_grundy(g, w).valid);
    }
}

TEST_CASE("degree bound and induced-subgraph monotonicity") {
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(3 + trial % 8, 50, 900 + trial);
        CHECK(gamma_exact(g) <= g.max_degree() + 1);
    }
    // deleting a vertex never increases the grundy number: exhaustive n <= 6
    for (int n = 2; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            Graph g = test_helpers::labeled_graph(n, mask);
            int whole = gamma_exact(g);
            for (int v = 0; v < n; ++v) {
                std::vector<int> keep;
                for (int u = 0; u < n; ++u)
                    if (u != v) keep.push_back(u);
                CHECK(gamma_exact(g.induced(keep)) <= whole);
            }
        }
    }
}

TEST_CASE("first_fit_search: determinism and bounds") {
    CHECK(first_fit_search(complete_graph(5), 1, 42) == 5);
    Graph p4 = path_graph(4);
    int found = first_fit_search(p4, 1000, 7);
    CHECK(found == 3);
    CHECK(first_fit_search(p4, 1000, 7) == found);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(8, 40, 2000 + trial);
        CHECK(first_fit_search(g, 50, trial) <= gamma_exact(g));
    }
}

TEST_CASE("coloring serialization round-trip") {
    Graph g = path_graph(3);
    GrundyColoring c = first_fit(g, {0, 1, 2});
    std::string json = coloring_to_json(c);
    GrundyColoring back = coloring_from_json(json, 3);
    CHECK(back.colors == c.colors);
    CHECK(back.max_color == c.max_color);
    TargetSpec spec{{0, 2}, 4};
    TargetSpec spec_back = targets_from_json(targets_to_json(spec));
    CHECK(spec_back.vertices == spec.vertices);
    CHECK(spec_back.target == spec.target);
}
