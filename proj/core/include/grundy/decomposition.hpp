#ifndef GRUNDY_DECOMPOSITION_HPP
#define GRUNDY_DECOMPOSITION_HPP

#include "grundy/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace grundy {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;       // each sorted ascending
    std::vector<std::pair<int, int>> edges;   // over bag indices, must form a tree
    int width() const;
};

// Bags in path order; the bag tree is the implicit chain.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;
    int width() const;
};

struct DecompVerdict {
    bool valid = false;
    int width = -1;
    std::vector<std::string> violations;
};

// Checks vertex coverage, edge coverage, per-vertex connectivity and that the
// bag edges form a tree.
DecompVerdict verify_decomposition(const Graph& g, const TreeDecomposition& d);
DecompVerdict verify_decomposition(const Graph& g, const PathDecomposition& d);

TreeDecomposition to_tree(const PathDecomposition& d);

// Nice form: node 0 is the root with an empty bag; every node is a leaf
// (empty bag), introduce, forget or join node. Width is preserved exactly.
// Redundant input bags (subset of a neighbor) are contracted first; after
// that the node count is at most 8 * max(n,1) * (width+2).
TreeDecomposition to_nice(const TreeDecomposition& d);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    int vertex = -1;                // introduced / forgotten vertex
    std::vector<int> children;
};

// Rooted view of a nice decomposition (root = node 0); throws
// invalid_argument if the decomposition is not nice.
std::vector<NiceNode> classify_nice(const TreeDecomposition& d);

// Exact treewidth / pathwidth with a certificate, by dynamic programming
// over vertex subsets (elimination orders / layouts). Hard cap n <= 12.
std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g);
std::pair<int, PathDecomposition> exact_pathwidth(const Graph& g);

// Width-1 (or 0) certificate for forests; invalid_argument on cyclic input.
TreeDecomposition decomposition_of_tree(const Graph& g);

// Text format: "bags: [[...],[...]]" and, for tree decompositions, a second
// line "edges: [[i,j],...]". Path decompositions are bags-only files.
std::string tree_decomposition_to_string(const TreeDecomposition& d);
std::string path_decomposition_to_string(const PathDecomposition& d);
TreeDecomposition tree_decomposition_from_string(const std::string& text);
PathDecomposition path_decomposition_from_string(const std::string& text);

} // namespace grundy

#endif
