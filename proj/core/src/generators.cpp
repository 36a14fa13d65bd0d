#include "grundy/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace grundy {

Graph random_graph(int n, int percent, uint64_t seed) {
    if (n < 0 || percent < 0 || percent > 100)
        throw std::invalid_argument("random_graph: bad parameters");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
    return g;
}

Graph caterpillar(int spine, int max_legs, uint64_t seed) {
    if (spine < 1 || max_legs < 0) throw std::invalid_argument("caterpillar: bad parameters");
    std::mt19937_64 rng(seed);
    Graph g = path_graph(spine);
    for (int v = 0; v < spine; ++v) {
        int legs = max_legs == 0 ? 0 : static_cast<int>(rng() % (max_legs + 1));
        for (int q = 0; q < legs; ++q) {
            int leg = g.add_vertex();
            g.add_edge(v, leg);
        }
    }
    return g;
}

namespace {

// random cotree: leaves are single vertices, internal nodes alternate-ish
// between union and join
Graph random_cotree(int n, int max_branch, std::mt19937_64& rng, bool join_here) {
    if (n == 1) return Graph(1);
    int max_b = std::min(max_branch, n);
    int branches = 2 + (max_b > 2 ? static_cast<int>(rng() % (max_b - 1)) : 0);
    branches = std::min(branches, n);
    // random composition of n into `branches` positive parts
    std::vector<int> sizes(branches, 1);
    for (int left = n - branches; left > 0; --left) ++sizes[rng() % branches];
    Graph g;
    std::vector<std::pair<int, int>> ranges;
    for (int part : sizes) {
        bool flip = rng() % 4 == 0; // occasionally repeat the same operation
        Graph sub = random_cotree(part, max_branch, rng, flip ? join_here : !join_here);
        int off = g.vertex_count();
        for (int v = 0; v < sub.vertex_count(); ++v) g.add_vertex();
        for (auto [a, b] : sub.edges()) g.add_edge(off + a, off + b);
        ranges.emplace_back(off, off + sub.vertex_count());
    }
    if (join_here)
        for (std::size_t a = 0; a < ranges.size(); ++a)
            for (std::size_t b = a + 1; b < ranges.size(); ++b)
                for (int u = ranges[a].first; u < ranges[a].second; ++u)
                    for (int v = ranges[b].first; v < ranges[b].second; ++v) g.add_edge(u, v);
    return g;
}

} // namespace

Graph random_cograph(int n, int max_branch, uint64_t seed) {
    if (n < 1 || max_branch < 2) throw std::invalid_argument("random_cograph: bad parameters");
    std::mt19937_64 rng(seed);
    return random_cotree(n, max_branch, rng, rng() % 2 == 0);
}

Graph random_bounded_nd(int classes, int max_class_size, uint64_t seed) {
    if (classes < 1 || max_class_size < 1)
        throw std::invalid_argument("random_bounded_nd: bad parameters");
    std::mt19937_64 rng(seed);
    std::vector<int> size(classes), clique(classes);
    for (int c = 0; c < classes; ++c) {
        size[c] = 1 + static_cast<int>(rng() % max_class_size);
        clique[c] = rng() % 2;
    }
    std::vector<std::vector<char>> quotient(classes, std::vector<char>(classes, 0));
    for (int a = 0; a < classes; ++a)
        for (int b = a + 1; b < classes; ++b) quotient[a][b] = quotient[b][a] = rng() % 2;
    Graph g;
    std::vector<std::pair<int, int>> ranges;
    for (int c = 0; c < classes; ++c) {
        int off = g.vertex_count();
        for (int q = 0; q < size[c]; ++q) g.add_vertex();
        if (clique[c])
            for (int a = off; a < off + size[c]; ++a)
                for (int b = a + 1; b < off + size[c]; ++b) g.add_edge(a, b);
        ranges.emplace_back(off, off + size[c]);
    }
    for (int a = 0; a < classes; ++a)
        for (int b = a + 1; b < classes; ++b)
            if (quotient[a][b])
                for (int u = ranges[a].first; u < ranges[a].second; ++u)
                    for (int v = ranges[b].first; v < ranges[b].second; ++v) g.add_edge(u, v);
    return g;
}

PlantedModule random_planted_module(int outer, int module_size, uint64_t seed) {
    if (outer < 1 || module_size < 1)
        throw std::invalid_argument("random_planted_module: bad parameters");
    std::mt19937_64 rng(seed);
    Graph shell(outer);
    for (int u = 0; u < outer; ++u)
        for (int v = u + 1; v < outer; ++v)
            if (rng() % 2) shell.add_edge(u, v);
    int slot = static_cast<int>(rng() % outer);
    PlantedModule out;
    Graph g;
    std::vector<int> ids_of_outer(outer, -1);
    for (int v = 0; v < outer; ++v) {
        if (v == slot) {
            for (int q = 0; q < module_size; ++q) out.module.push_back(g.add_vertex());
        } else {
            ids_of_outer[v] = g.add_vertex();
        }
    }
    // random internal structure of the module
    for (std::size_t a = 0; a < out.module.size(); ++a)
        for (std::size_t b = a + 1; b < out.module.size(); ++b)
            if (rng() % 2) g.add_edge(out.module[a], out.module[b]);
    for (int u = 0; u < outer; ++u)
        for (int v = u + 1; v < outer; ++v) {
            if (!shell.has_edge(u, v)) continue;
            std::vector<int> side_u =
                u == slot ? out.module : std::vector<int>{ids_of_outer[u]};
            std::vector<int> side_v =
                v == slot ? out.module : std::vector<int>{ids_of_outer[v]};
            for (int a : side_u)
                for (int b : side_v) g.add_edge(a, b);
        }
    out.graph = std::move(g);
    return out;
}

std::vector<int> random_permutation(int n, uint64_t seed) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }
    return order;
}

} // namespace grundy
