#include "grundy/binomial.hpp"

#include <stdexcept>
#include <string>

namespace grundy {

int binomial_size(int order) {
    if (order < 1 || order > 30) throw std::invalid_argument("binomial_size: order out of range");
    return 1 << (order - 1);
}

int binomial_child_offset(int child_order) { return 1 << (child_order - 1); }

namespace {

// Appends the canonical order-i tree into g starting at the current vertex
// count; returns the root id.
int append_binomial(Graph& g, int order, const std::string& tag) {
    int root = g.add_vertex(tag);
    for (int c = 1; c < order; ++c) {
        int child_root = append_binomial(g, c, tag);
        g.add_edge(root, child_root);
    }
    return root;
}

void collect_subtrees(int base, int order, int t, std::vector<std::vector<int>>& out) {
    if (order - t == 1) {
        // second half of the canonical layout is the order-(order-1) copy
        std::vector<int> ids;
        int half = binomial_size(order) / 2;
        ids.reserve(half);
        for (int off = half; off < 2 * half; ++off) ids.push_back(base + off);
        out.push_back(std::move(ids));
        return;
    }
    int half = binomial_size(order) / 2;
    collect_subtrees(base, order - 1, t, out);
    collect_subtrees(base + half, order - 1, t, out);
}

void color_root_j(std::vector<int>& col, int base, int order, int j);

// Root colored 2, witnessed by its own order-1 child colored 1.
void color_root_2_via_leaf(std::vector<int>& col, int base, int order) {
    col[base] = 2;
    col[base + binomial_child_offset(1)] = 1;
    for (int c = 2; c < order; ++c)
        color_root_j(col, base + binomial_child_offset(c), c, 1);
}

// Root of the order-`order` subtree at `base` gets exactly color j.
void color_root_j(std::vector<int>& col, int base, int order, int j) {
    if (j == order) {
        col[base] = order;
        for (int c = 1; c < order; ++c)
            color_root_j(col, base + binomial_child_offset(c), c, c);
    } else if (j >= 2) {
        col[base] = j;
        for (int c = 1; c < j; ++c)
            color_root_j(col, base + binomial_child_offset(c), c, c);
        for (int c = j; c < order; ++c)
            color_root_j(col, base + binomial_child_offset(c), c, j - 1);
    } else {
        // j == 1: children must avoid color 1; the order-1 child leans on the
        // root itself for its color-1 witness, the others on their own leaves.
        col[base] = 1;
        for (int c = 1; c < order; ++c) {
            int cb = base + binomial_child_offset(c);
            if (c == 1)
                col[cb] = 2;
            else
                color_root_2_via_leaf(col, cb, c);
        }
    }
}

void attach_supports_inplace(Graph& g, int v, const std::vector<int>& sizes, bool clique,
                             std::vector<SupportRecord>* records) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("attach supports: vertex out of range");
    for (int size : sizes) {
        if (size < 1) throw std::invalid_argument("attach supports: size < 1");
        SupportRecord rec;
        rec.supported = v;
        rec.order = size;
        rec.clique = clique;
        rec.base = g.vertex_count();
        std::string tag = (clique ? "csupport(" : "tsupport(") + std::to_string(v) + "," +
                          std::to_string(size) + ")";
        if (clique) {
            int connector = g.add_vertex(tag);
            for (int q = 1; q < size; ++q) {
                int w = g.add_vertex(tag);
                for (int prev = rec.base; prev < w; ++prev) g.add_edge(prev, w);
            }
            g.add_edge(v, connector);
            rec.attach = connector;
        } else {
            int root = append_binomial(g, size, tag);
            g.add_edge(v, root);
            rec.attach = root;
        }
        if (records) records->push_back(rec);
    }
}

} // namespace

RootedTree build_binomial_tree(int order) {
    if (order < 1) throw std::invalid_argument("build_binomial_tree: order < 1");
    RootedTree t;
    t.root = append_binomial(t.graph, order, "");
    return t;
}

std::vector<std::vector<int>> find_disjoint_subtrees(int order, int t) {
    if (t < 1 || t >= order)
        throw std::invalid_argument("find_disjoint_subtrees: need 1 <= t < order");
    std::vector<std::vector<int>> out;
    collect_subtrees(0, order, t, out);
    return out;
}

Graph attach_tree_supports(const Graph& g, int v, const std::vector<int>& sizes) {
    Graph out = g;
    attach_supports_inplace(out, v, sizes, false, nullptr);
    return out;
}

Graph attach_tree_supports(const Graph& g, int v, const std::vector<int>& sizes,
                           std::vector<SupportRecord>& records) {
    Graph out = g;
    attach_supports_inplace(out, v, sizes, false, &records);
    return out;
}

void attach_tree_supports_inplace(Graph& g, int v, const std::vector<int>& sizes,
                                  std::vector<SupportRecord>& records) {
    attach_supports_inplace(g, v, sizes, false, &records);
}

Graph attach_clique_supports(const Graph& g, int v, const std::vector<int>& sizes) {
    Graph out = g;
    attach_supports_inplace(out, v, sizes, true, nullptr);
    return out;
}

Graph attach_clique_supports(const Graph& g, int v, const std::vector<int>& sizes,
                             std::vector<SupportRecord>& records) {
    Graph out = g;
    attach_supports_inplace(out, v, sizes, true, &records);
    return out;
}

void attach_clique_supports_inplace(Graph& g, int v, const std::vector<int>& sizes,
                                    std::vector<SupportRecord>& records) {
    attach_supports_inplace(g, v, sizes, true, &records);
}

void visit_binomial_edges(int base, int order,
                          const std::function<void(int, int)>& visit) {
    for (int c = 1; c < order; ++c) {
        int child = base + binomial_child_offset(c);
        visit(base, child);
        visit_binomial_edges(child, c, visit);
    }
}

std::vector<int> binomial_coloring(int order, int root_color) {
    if (order < 1) throw std::invalid_argument("binomial_coloring: order < 1");
    if (root_color < 1 || root_color > order)
        throw std::invalid_argument("binomial_coloring: root color out of range");
    std::vector<int> col(binomial_size(order), 0);
    color_root_j(col, 0, order, root_color);
    return col;
}

} // namespace grundy
