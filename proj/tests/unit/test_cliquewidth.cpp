#include <doctest.h>

#include "grundy/cliquewidth.hpp"
#include "grundy/graph.hpp"

#include <stdexcept>

using namespace grundy;

TEST_CASE("eval: two intros and a join give an edge") {
    CliquewidthExpression e = parse_cw_expression("(join 1 2 (union (intro 1) (intro 2)))");
    auto [g, labels] = eval_cw_expression(e);
    CHECK(g.same_structure(complete_graph(2)));
    CHECK(labels == 2);
}

TEST_CASE("eval: join on an absent label is a no-op") {
    CliquewidthExpression e = parse_cw_expression("(join 1 5 (union (intro 1) (intro 2)))");
    auto [g, labels] = eval_cw_expression(e);
    CHECK(g.edge_count() == 0);
    CHECK(g.vertex_count() == 2);
    CHECK(labels == 3);
}

TEST_CASE("eval: rename chain collapses, junk label untouched") {
    // merge everything into one label, then join it with an unused junk 0
    CliquewidthExpression e = parse_cw_expression(
        "(join 1 0 (rename 2 1 (union (intro 1) (intro 2))))");
    auto [g, labels] = eval_cw_expression(e);
    CHECK(g.edge_count() == 0); // nothing carries label 0, the join did nothing
    CHECK(!e.label_joined(3));
    CHECK(e.label_joined(0));
}

TEST_CASE("eval rejects malformed expressions") {
    CHECK_THROWS_AS(eval_cw_expression(parse_cw_expression("(join 1 1 (intro 1))")),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_cw_expression(parse_cw_expression("(rename 2 2 (intro 2))")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_cw_expression("(join 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cw_expression("(frob 1)"), std::invalid_argument);
}

TEST_CASE("builder produces k4 and printing round-trips") {
    CwBuilder b;
    b.intro(1);
    for (int q = 1; q < 4; ++q) {
        b.intro(2);
        b.join(2, 1);
        b.rename(2, 1);
    }
    CliquewidthExpression e = b.finish();
    auto [g, labels] = eval_cw_expression(e);
    CHECK(g.same_structure(complete_graph(4)));
    CHECK(labels == 2);

    std::string text = cw_expression_to_string(e);
    CliquewidthExpression back = parse_cw_expression(text);
    auto [g2, labels2] = eval_cw_expression(back);
    CHECK(g2.same_structure(g));
    CHECK(labels2 == labels);
    CHECK(cw_expression_to_string(back) == text);
}

TEST_CASE("eval is deterministic") {
    CwBuilder b;
    b.intro(3);
    b.intro(4);
    b.join(3, 4);
    b.rename(4, 3);
    b.intro(4);
    b.join(3, 4);
    CliquewidthExpression e = b.finish();
    auto [g1, l1] = eval_cw_expression(e);
    auto [g2, l2] = eval_cw_expression(e);
    CHECK(g1.same_structure(g2));
    CHECK(graph_to_string(g1) == graph_to_string(g2));
    CHECK(l1 == l2);
}
