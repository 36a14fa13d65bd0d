#ifndef GRUNDY_TEST_HELPERS_HPP
#define GRUNDY_TEST_HELPERS_HPP

#include "grundy/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

// test-side oracles, independent of the library internals

namespace test_helpers {

inline std::string ahu_encode(const grundy::Graph& g, int v, int parent) {
    std::vector<std::string> children;
    for (int w : g.neighbors(v))
        if (w != parent) children.push_back(ahu_encode(g, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

// canonical form of an unrooted tree via its centroid(s)
inline std::string tree_canonical(const grundy::Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return "";
    std::vector<int> size(n, 0);
    auto subtree = [&](auto&& self, int v, int parent) -> int {
        size[v] = 1;
        for (int w : g.neighbors(v))
            if (w != parent) size[v] += self(self, w, v);
        return size[v];
    };
    subtree(subtree, 0, -1);
    std::vector<int> centroids;
    auto find_centroid = [&](auto&& self, int v, int parent) -> void {
        int heaviest = n - size[v];
        for (int w : g.neighbors(v))
            if (w != parent) heaviest = std::max(heaviest, size[w]);
        if (heaviest <= n / 2) centroids.push_back(v);
        for (int w : g.neighbors(v))
            if (w != parent) self(self, w, v);
    };
    find_centroid(find_centroid, 0, -1);
    std::string best;
    for (int c : centroids) {
        std::string enc = ahu_encode(g, c, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

inline bool trees_isomorphic(const grundy::Graph& a, const grundy::Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return tree_canonical(a) == tree_canonical(b);
}

// all labeled graphs on n vertices (edge set = bits of `mask`)
inline grundy::Graph labeled_graph(int n, unsigned mask) {
    grundy::Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1u << bit)) g.add_edge(u, v);
    return g;
}

} // namespace test_helpers

#endif
