#ifndef GRUNDY_CLIQUEWIDTH_HPP
#define GRUNDY_CLIQUEWIDTH_HPP

#include "grundy/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace grundy {

// Expression tree over labeled graphs: intro(l) creates one vertex with
// label l; union is disjoint union; join(a,b) adds all edges between the
// current label-a and label-b sets of its operand; rename(a,b) relabels a
// to b. Nodes are stored children-before-parents, so node indices are a
// topological order.
struct CwNode {
    enum Kind { Intro, Union, Join, Rename } kind = Intro;
    int a = -1, b = -1;      // label arguments
    int left = -1, right = -1; // child node indices
};

struct CliquewidthExpression {
    std::vector<CwNode> nodes;
    int root = -1;

    // number of distinct labels occurring anywhere in the expression
    int label_count() const;
    // true iff the label is used as an argument of some join
    bool label_joined(int label) const;
};

// Evaluates bottom-up; vertices are numbered in left-to-right introduce
// order. join(a,b) with one side empty in scope is a no-op; join or rename
// with equal labels is invalid-argument. Returns the underlying graph and
// the distinct-label count.
std::pair<Graph, int> eval_cw_expression(const CliquewidthExpression& e);

// s-expression text, e.g. (join 3 4 (union (intro 3) (intro 4)))
CliquewidthExpression parse_cw_expression(const std::string& text);
std::string cw_expression_to_string(const CliquewidthExpression& e);

// Incremental builder for left-deep expression chains.
class CwBuilder {
public:
    // appends a new vertex (union with the accumulated expression)
    void intro(int label);
    void join(int a, int b);
    void rename(int a, int b);
    CliquewidthExpression finish();

private:
    CliquewidthExpression e_;
    void wrap(CwNode::Kind kind, int a, int b);
};

} // namespace grundy

#endif
