#include <doctest.h>

#include "grundy/binomial.hpp"
#include "grundy/coloring.hpp"

#include "helpers.hpp"

#include <set>
#include <stdexcept>

using namespace grundy;

TEST_CASE("binomial tree shapes") {
    CHECK_THROWS_AS(build_binomial_tree(0), std::invalid_argument);
    RootedTree t1 = build_binomial_tree(1);
    CHECK(t1.graph.vertex_count() == 1);
    CHECK(t1.graph.edge_count() == 0);

    RootedTree t3 = build_binomial_tree(3);
    CHECK(t3.graph.vertex_count() == 4);
    CHECK(t3.graph.degree(t3.root) == 2);
    CHECK(test_helpers::trees_isomorphic(t3.graph, path_graph(4)));

    RootedTree t5 = build_binomial_tree(5);
    CHECK(t5.graph.vertex_count() == 16);
    CHECK(t5.graph.degree(t5.root) == 4);

    for (int i = 1; i <= 10; ++i) {
        RootedTree t = build_binomial_tree(i);
        CHECK(t.graph.vertex_count() == (1 << (i - 1)));
        CHECK(t.graph.is_tree());
    }
}

TEST_CASE("disjoint subtrees: counts and structure") {
    CHECK_THROWS_AS(find_disjoint_subtrees(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_disjoint_subtrees(3, 0), std::invalid_argument);

    auto single = find_disjoint_subtrees(2, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<int>{1});

    for (int i = 2; i <= 7; ++i) {
        RootedTree t = build_binomial_tree(i);
        for (int small = 1; small < i; ++small) {
            auto sets = find_disjoint_subtrees(i, small);
            CHECK(static_cast<int>(sets.size()) == 1 << (i - small - 1));
            std::set<int> seen;
            RootedTree ref = build_binomial_tree(small);
            for (const auto& ids : sets) {
                CHECK(static_cast<int>(ids.size()) == 1 << (small - 1));
                for (int v : ids) {
                    CHECK(v != t.root);
                    CHECK(seen.insert(v).second); // pairwise disjoint
                }
                CHECK(test_helpers::trees_isomorphic(t.graph.induced(ids), ref.graph));
            }
            // no edge between distinct sets
            for (std::size_t a = 0; a < sets.size(); ++a)
                for (std::size_t b = a + 1; b < sets.size(); ++b)
                    for (int u : sets[a])
                        for (int v : sets[b]) CHECK(!t.graph.has_edge(u, v));
        }
    }
}

TEST_CASE("tree supports") {
    Graph k1(1);
    Graph g = attach_tree_supports(k1, 0, {1, 2});
    CHECK(g.vertex_count() == 4);
    CHECK(g.degree(0) == 2);

    Graph unchanged = attach_tree_supports(k1, 0, {});
    CHECK(unchanged.same_structure(k1));

    Graph k2 = complete_graph(2);
    Graph g2 = attach_tree_supports(k2, 0, {3});
    CHECK(g2.vertex_count() == 6);
    CHECK(g2.degree(0) == 2); // the old neighbor plus the new root

    // the original induced subgraph is untouched
    Graph base = cycle_graph(5);
    std::vector<SupportRecord> recs;
    Graph sup = attach_tree_supports(base, 2, {1, 2, 3}, recs);
    CHECK(sup.induced_prefix(5).same_structure(base));
    CHECK(recs.size() == 3);
    for (const auto& r : recs) CHECK(sup.has_edge(r.supported, r.attach));
}

TEST_CASE("clique supports") {
    Graph k1(1);
    Graph e = attach_clique_supports(k1, 0, {1});
    CHECK(e.vertex_count() == 2);
    CHECK(e.has_edge(0, 1));

    Graph tri = attach_clique_supports(k1, 0, {3});
    CHECK(tri.vertex_count() == 4);
    CHECK(tri.degree(0) == 1); // only the connector reaches the vertex
    CHECK(tri.has_edge(0, 1)); // connector is the lowest-numbered clique vertex
    CHECK(tri.has_edge(1, 2));
    CHECK(tri.has_edge(1, 3));
    CHECK(tri.has_edge(2, 3));

    Graph multi = attach_clique_supports(k1, 0, {1, 2, 3});
    CHECK(multi.vertex_count() == 7);
    CHECK(multi.degree(0) == 3);
    CHECK(multi.induced_prefix(1).same_structure(k1));
}

TEST_CASE("binomial colorings hit every root color") {
    for (int order = 1; order <= 6; ++order) {
        RootedTree t = build_binomial_tree(order);
        for (int rc = 1; rc <= order; ++rc) {
            std::vector<int> col = binomial_coloring(order, rc);
            CHECK(col[t.root] == rc);
            GrundyColoring c;
            c.colors = col;
            c.max_color = *std::max_element(col.begin(), col.end());
            CHECK(verify_grundy(t.graph, c).valid);
        }
    }
}
