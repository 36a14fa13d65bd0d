#ifndef GRUNDY_BINOMIAL_HPP
#define GRUNDY_BINOMIAL_HPP

#include "grundy/graph.hpp"

#include <functional>
#include <vector>

namespace grundy {

struct RootedTree {
    Graph graph;
    int root = 0;
};

// Canonical layout of the order-i binomial tree: 2^(i-1) vertices, the root
// at offset 0, the order-j child subtree occupying offsets [2^(j-1), 2^j).
// Equivalently, offsets [0, 2^(i-2)) form the canonical tree of order i-1 and
// offsets [2^(i-2), 2^(i-1)) a second copy whose root hangs off offset 0.
int binomial_size(int order);
int binomial_child_offset(int child_order); // 2^(child_order-1)

// Order-i binomial tree in canonical layout, root degree i-1.
RootedTree build_binomial_tree(int order);

// Exactly 2^(order-t-1) vertex-disjoint, pairwise non-adjacent copies of the
// order-t tree inside the canonical order-i tree, none containing the root.
// Each returned set lists canonical vertex ids and induces an order-t copy.
std::vector<std::vector<int>> find_disjoint_subtrees(int order, int t);

// Record of one support gadget grafted onto a vertex.
struct SupportRecord {
    int supported = -1; // the vertex the gadget hangs from
    int order = 0;      // tree order, or clique size
    int base = -1;      // first id of the gadget block
    int attach = -1;    // tree root / clique connector (joined to `supported`)
    bool clique = false;
};

// For each i in sizes, appends a fresh canonical binomial tree of order i and
// joins its root to v. Existing vertices keep their ids; new vertices are
// tagged as supports of v.
Graph attach_tree_supports(const Graph& g, int v, const std::vector<int>& sizes);
Graph attach_tree_supports(const Graph& g, int v, const std::vector<int>& sizes,
                           std::vector<SupportRecord>& records);
void attach_tree_supports_inplace(Graph& g, int v, const std::vector<int>& sizes,
                                  std::vector<SupportRecord>& records);

// For each i in sizes, appends a fresh i-clique and joins its lowest-numbered
// vertex (the connector, appended first) to v.
Graph attach_clique_supports(const Graph& g, int v, const std::vector<int>& sizes);
Graph attach_clique_supports(const Graph& g, int v, const std::vector<int>& sizes,
                             std::vector<SupportRecord>& records);
void attach_clique_supports_inplace(Graph& g, int v, const std::vector<int>& sizes,
                                    std::vector<SupportRecord>& records);

// Visits every parent-child edge of the canonical order-i layout based at
// `base`, parents before their subtrees.
void visit_binomial_edges(int base, int order,
                          const std::function<void(int parent, int child)>& visit);

// Coloring of the canonical order-i tree, indexed by canonical offset, that
// assigns exactly root_color to the root (any 1 <= root_color <= order) and
// is a valid Grundy coloring of the tree in isolation. root_color == order
// is the optimal coloring; smaller values realize the sub-optimal ones.
std::vector<int> binomial_coloring(int order, int root_color);

} // namespace grundy

#endif
