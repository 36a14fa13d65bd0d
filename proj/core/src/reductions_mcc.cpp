#include "grundy/reductions.hpp"

#include "grundy/errors.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace grundy {

namespace {

int ceil_log2(long long x) {
    int r = 0;
    while ((1LL << r) < x) ++r;
    return r;
}

bool power_of_two(int x) { return x >= 1 && (x & (x - 1)) == 0; }

std::vector<int> range_vec(int lo, int hi) { // [lo, hi]
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

} // namespace

void MccInstance::validate() const {
    if (k < 2) throw std::invalid_argument("mcc: k < 2");
    if (!power_of_two(n) || n < 2)
        throw std::invalid_argument("mcc: part size must be a power of two >= 2");
    std::map<std::array<int, 4>, int> seen;
    for (const auto& e : edges) {
        if (e.part_a < 0 || e.part_a >= k || e.part_b < 0 || e.part_b >= k)
            throw std::invalid_argument("mcc: edge part out of range");
        if (e.part_a >= e.part_b)
            throw std::invalid_argument("mcc: edges must have part_a < part_b");
        if (e.idx_a < 0 || e.idx_a >= n || e.idx_b < 0 || e.idx_b >= n)
            throw std::invalid_argument("mcc: edge vertex out of range");
        if (++seen[{e.part_a, e.idx_a, e.part_b, e.idx_b}] > 1)
            throw std::invalid_argument("mcc: duplicate edge");
    }
}

int mcc_threshold(int k, int n, int m) {
    long long count = static_cast<long long>(k) * (m + 1) +
                      static_cast<long long>(k) * (k - 1) / 2 + 2LL * m;
    return ceil_log2(count) + 2 * ceil_log2(n) + 5;
}

ReductionOutput build_mcc_reduction(const MccInstance& inst) {
    inst.validate();
    const int k = inst.k, n = inst.n, m = inst.m();
    const int L = ceil_log2(n); // exact, n is a power of two
    const int t = 2 * L + 4;

    ReductionOutput out;
    out.instance = inst;
    GadgetIndex& ix = out.index;
    ix.log_n = L;
    Graph g;

    // --- core vertices; supports come strictly afterwards so the stripped
    // graph is the id prefix
    ix.s.assign(k, std::vector<std::vector<int>>(m + 2, std::vector<int>(2 * L)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m + 1; ++j)
            for (int l = 1; l <= 2 * L; ++l)
                ix.s[i][j][l - 1] = g.add_vertex("s(" + std::to_string(i) + "," +
                                                 std::to_string(j) + "," + std::to_string(l) +
                                                 ")");
    ix.p.assign(k, std::vector<int>(m + 1));
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i < k; ++i)
            ix.p[i][j] =
                g.add_vertex("p(" + std::to_string(i) + "," + std::to_string(j) + ")");
    ix.w_x.resize(m);
    ix.w_y.resize(m);
    ix.wp_x.resize(m);
    ix.wp_y.resize(m);
    for (int e = 0; e < m; ++e) {
        ix.w_x[e] = g.add_vertex("w(" + std::to_string(e) + ",x)");
        ix.w_y[e] = g.add_vertex("w(" + std::to_string(e) + ",y)");
        ix.wp_x[e] = g.add_vertex("w'(" + std::to_string(e) + ",x)");
        ix.wp_y[e] = g.add_vertex("w'(" + std::to_string(e) + ",y)");
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            ix.validators.push_back(
                {a, b, g.add_vertex("q(" + std::to_string(a) + "," + std::to_string(b) + ")")});
    ix.core_count = g.vertex_count();

    // --- core edges
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m + 1; ++j)
            for (int l = 1; l <= L; ++l)
                g.add_edge(ix.s[i][j][2 * l - 2], ix.s[i][j][2 * l - 1]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m; ++j)
            for (int l = 1; l <= L; ++l) {
                g.add_edge(ix.p[i][j], ix.s[i][j][2 * l - 1]);     // column j, even side
                g.add_edge(ix.p[i][j], ix.s[i][j + 1][2 * l - 2]); // column j+1, odd side
            }
    // selection wiring: bit l of vertex idx (b_1 most significant) picks
    // s^{2l-b_l} in the edge's own column
    auto wire_bits = [&](int w, int part, int column, int idx) {
        for (int l = 1; l <= L; ++l) {
            int bit = (idx >> (L - l)) & 1;
            g.add_edge(w, ix.s[part][column][2 * l - bit - 1]);
        }
    };
    for (int e = 0; e < m; ++e) {
        const McEdge& edge = inst.edges[e];
        int column = e + 1;
        wire_bits(ix.w_x[e], edge.part_a, column, edge.idx_a);
        wire_bits(ix.w_y[e], edge.part_b, column, edge.idx_b);
        g.add_edge(ix.w_x[e], ix.w_y[e]);
        g.add_edge(ix.wp_x[e], ix.w_x[e]);
        g.add_edge(ix.wp_y[e], ix.w_y[e]);
    }
    for (const auto& [a, b, q] : ix.validators)
        for (int e = 0; e < m; ++e)
            if (inst.edges[e].part_a == a && inst.edges[e].part_b == b) {
                g.add_edge(q, ix.w_x[e]);
                g.add_edge(q, ix.w_y[e]);
            }

    // --- supports
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m + 1; ++j)
            for (int l = 2; l <= L; ++l) {
                attach_tree_supports_inplace(g, ix.s[i][j][2 * l - 2], range_vec(1, 2 * l - 2),
                                             ix.supports);
                attach_tree_supports_inplace(g, ix.s[i][j][2 * l - 1], range_vec(1, 2 * l - 2),
                                             ix.supports);
            }
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i < k; ++i)
            attach_tree_supports_inplace(g, ix.p[i][j], {2 * L + 1, 2 * L + 2, 2 * L + 3},
                                         ix.supports);
    std::vector<int> odd_sizes;
    for (int l = 0; l <= L; ++l) odd_sizes.push_back(2 * l + 1);
    std::vector<int> checker_sizes = range_vec(1, 2 * L + 3);
    checker_sizes.erase(std::find(checker_sizes.begin(), checker_sizes.end(), 2 * L + 1));
    for (int e = 0; e < m; ++e) {
        attach_tree_supports_inplace(g, ix.w_x[e], odd_sizes, ix.supports);
        attach_tree_supports_inplace(g, ix.w_y[e], odd_sizes, ix.supports);
        attach_tree_supports_inplace(g, ix.wp_x[e], checker_sizes, ix.supports);
        attach_tree_supports_inplace(g, ix.wp_y[e], checker_sizes, ix.supports);
    }
    for (const auto& [a, b, q] : ix.validators)
        attach_tree_supports_inplace(g, q, range_vec(1, 2 * L + 2), ix.supports);

    // --- targets, column-sweep order: per column its checkers then the
    // propagators behind it, validators last
    out.targets.target = t;
    for (int i = 0; i < k; ++i) out.target_order.push_back(ix.p[i][0]);
    for (int j = 1; j <= m; ++j) {
        out.target_order.push_back(ix.wp_x[j - 1]);
        out.target_order.push_back(ix.wp_y[j - 1]);
        for (int i = 0; i < k; ++i) out.target_order.push_back(ix.p[i][j]);
    }
    for (const auto& [a, b, q] : ix.validators) out.target_order.push_back(q);
    out.targets.vertices = out.target_order;
    out.threshold = mcc_threshold(k, n, m);
    out.gprime = std::move(g);
    return out;
}

GprimePathDecomposition build_gprime_path_decomposition(const ReductionOutput& out) {
    const MccInstance& inst = out.instance;
    const GadgetIndex& ix = out.index;
    const int k = inst.k, m = inst.m(), L = ix.log_n;

    GprimePathDecomposition res;
    res.important_bag.assign(out.target_order.size(), -1);
    std::map<int, int> target_slot; // vertex -> position in target_order
    for (std::size_t i = 0; i < out.target_order.size(); ++i)
        target_slot[out.target_order[i]] = static_cast<int>(i);

    std::vector<int> base;
    for (const auto& [a, b, q] : ix.validators) base.push_back(q);

    auto push_bag = [&](std::vector<int> bag) {
        std::sort(bag.begin(), bag.end());
        res.pd.bags.push_back(std::move(bag));
        return static_cast<int>(res.pd.bags.size()) - 1;
    };
    auto mark_important = [&](int vertex, int bag_idx) {
        res.important_bag[target_slot.at(vertex)] = bag_idx;
    };

    for (int j = 0; j <= m + 1; ++j) {
        std::vector<int> frame = base;
        if (j >= 1)
            for (int i = 0; i < k; ++i) frame.push_back(ix.p[i][j - 1]);
        if (j <= m)
            for (int i = 0; i < k; ++i) frame.push_back(ix.p[i][j]);
        if (j >= 1 && j <= m) {
            frame.push_back(ix.w_x[j - 1]);
            frame.push_back(ix.w_y[j - 1]);
        }
        for (int i = 0; i < k; ++i)
            for (int l = 1; l <= L; ++l) {
                std::vector<int> bag = frame;
                bag.push_back(ix.s[i][j][2 * l - 2]);
                bag.push_back(ix.s[i][j][2 * l - 1]);
                push_bag(std::move(bag));
            }
        if (j >= 1 && j <= m) {
            std::vector<int> bag = frame;
            bag.push_back(ix.wp_x[j - 1]);
            mark_important(ix.wp_x[j - 1], push_bag(std::move(bag)));
            bag = frame;
            bag.push_back(ix.wp_y[j - 1]);
            mark_important(ix.wp_y[j - 1], push_bag(std::move(bag)));
        }
        if (j <= m) {
            // one duplicate of the column's last bag per propagator target
            for (int i = 0; i < k; ++i) {
                std::vector<int> dup = res.pd.bags.back();
                res.pd.bags.push_back(dup);
                mark_important(ix.p[i][j], static_cast<int>(res.pd.bags.size()) - 1);
            }
        }
    }
    for (const auto& [a, b, q] : ix.validators) {
        std::vector<int> dup = res.pd.bags.back();
        res.pd.bags.push_back(dup);
        mark_important(q, static_cast<int>(res.pd.bags.size()) - 1);
    }
    return res;
}

namespace {

struct FillContext {
    Graph h;
    TreeDecomposition cert;
    std::vector<int> order_of;
    const PathDecomposition* pd = nullptr;
    const std::vector<int>* targets = nullptr;
    const std::vector<int>* important = nullptr;
    int t = 0;
    std::vector<int> bag_with_vertex; // some certificate bag per input vertex

    int add_fill_vertex(int order) {
        int v = h.add_vertex("fill(" + std::to_string(order) + ")");
        if (static_cast<int>(order_of.size()) < v + 1) order_of.resize(v + 1, 0);
        order_of[v] = order;
        return v;
    }

    int add_bag(std::vector<int> bag, int attach_to) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        cert.bags.push_back(std::move(bag));
        int id = static_cast<int>(cert.bags.size()) - 1;
        if (attach_to >= 0) cert.edges.emplace_back(attach_to, id);
        return id;
    }
};

struct FillPiece {
    int root = -1;
    int special_bag = -1;
};

// recursion of the binomial substitution: targets[a..b) onto a tree of the
// given order, certificate over pd bags [lo..hi)
FillPiece fill_rec(FillContext& cx, int a, int b, int lo, int hi, int order) {
    FillPiece piece;
    int cnt = b - a;
    if (cnt == 0) {
        if (lo != hi) throw std::logic_error("tree_filling: empty side got bags");
        int root = cx.add_fill_vertex(order);
        int rb = cx.add_bag({root}, -1);
        struct Item {
            int vertex, order, bag;
        };
        std::vector<Item> stack{{root, order, rb}};
        while (!stack.empty()) {
            auto [v, ord, bag] = stack.back();
            stack.pop_back();
            for (int c = 1; c < ord; ++c) {
                int child = cx.add_fill_vertex(c);
                cx.h.add_edge(v, child);
                int cb = cx.add_bag({v, child}, bag);
                stack.push_back({child, c, cb});
            }
        }
        piece.root = root;
        piece.special_bag = rb;
        return piece;
    }
    if (cnt == 1 && order == cx.t + 1) {
        // base: modified order-(t+1) tree, the order-t child replaced by the target
        int target = (*cx.targets)[a];
        int imp = (*cx.important)[a];
        if (imp < lo || imp >= hi) throw std::logic_error("tree_filling: important bag outside segment");
        int root = cx.add_fill_vertex(cx.t + 1);
        cx.h.add_edge(root, target);
        // segment chain, each bag augmented with the segment's first bag and root
        const auto& first_bag = cx.pd->bags[lo];
        int prev = -1, important_aug = -1, last_aug = -1;
        for (int idx = lo; idx < hi; ++idx) {
            std::vector<int> bag = cx.pd->bags[idx];
            bag.insert(bag.end(), first_bag.begin(), first_bag.end());
            bag.push_back(root);
            int id = cx.add_bag(std::move(bag), prev);
            for (int v : cx.pd->bags[idx])
                if (cx.bag_with_vertex[v] == -1) cx.bag_with_vertex[v] = id;
            if (idx == imp) important_aug = id;
            prev = id;
            last_aug = id;
        }
        // the target slot bag and the remaining children hang off the
        // important bag (it contains both the root and the target)
        cx.add_bag({root, target}, important_aug);
        for (int c = 1; c < cx.t; ++c) {
            int child_bag_anchor = important_aug;
            int child = cx.add_fill_vertex(c);
            cx.h.add_edge(root, child);
            int cb = cx.add_bag({root, child}, child_bag_anchor);
            // deeper structure of the plain child
            struct Item {
                int vertex, order, bag;
            };
            std::vector<Item> stack{{child, c, cb}};
            while (!stack.empty()) {
                auto [v, ord, bag] = stack.back();
                stack.pop_back();
                for (int cc = 1; cc < ord; ++cc) {
                    int gchild = cx.add_fill_vertex(cc);
                    cx.h.add_edge(v, gchild);
                    int gb = cx.add_bag({v, gchild}, bag);
                    stack.push_back({gchild, cc, gb});
                }
            }
        }
        piece.root = root;
        piece.special_bag = last_aug;
        return piece;
    }
    // split: left gets ceil(cnt/2) targets and the bags up to its last
    // important bag
    int cnt_left = (cnt + 1) / 2;
    int hi_l, lo_r;
    if (cnt - cnt_left == 0) {
        hi_l = hi;
        lo_r = hi;
    } else {
        int cut = (*cx.important)[a + cnt_left - 1] + 1;
        hi_l = cut;
        lo_r = cut;
    }
    FillPiece left = fill_rec(cx, a, a + cnt_left, lo, hi_l, order - 1);
    FillPiece right = fill_rec(cx, a + cnt_left, b, lo_r, hi, order - 1);
    cx.h.add_edge(left.root, right.root);
    cx.order_of[left.root] = order; // left root is promoted to the new root
    std::vector<int> rp;
    auto append_bag = [&](int idx_lo, int idx_hi) {
        if (idx_lo < idx_hi) {
            rp.insert(rp.end(), cx.pd->bags[idx_lo].begin(), cx.pd->bags[idx_lo].end());
            rp.insert(rp.end(), cx.pd->bags[idx_hi - 1].begin(), cx.pd->bags[idx_hi - 1].end());
        }
    };
    append_bag(lo, hi_l);
    append_bag(lo_r, hi);
    rp.push_back(left.root);
    rp.push_back(right.root);
    int rprime = cx.add_bag(rp, left.special_bag);
    cx.cert.edges.emplace_back(rprime, right.special_bag);
    // the returned special bag carries the whole segment's first and last
    // pd bags plus the promoted root
    std::vector<int> rbag;
    if (lo < hi) {
        rbag.insert(rbag.end(), cx.pd->bags[lo].begin(), cx.pd->bags[lo].end());
        rbag.insert(rbag.end(), cx.pd->bags[hi - 1].begin(), cx.pd->bags[hi - 1].end());
    }
    rbag.push_back(left.root);
    piece.special_bag = cx.add_bag(rbag, rprime);
    piece.root = left.root;
    return piece;
}

} // namespace

FillResult tree_filling(const Graph& g, const TargetSpec& targets,
                        const std::vector<int>& target_order, const PathDecomposition& pd,
                        const std::vector<int>& important_bag,
                        const std::vector<SupportRecord>& supports) {
    if (target_order.empty()) throw std::invalid_argument("tree_filling: no targets");
    if (target_order.size() != important_bag.size() ||
        target_order.size() != targets.vertices.size())
        throw std::invalid_argument("tree_filling: target/important-bag size mismatch");
    for (std::size_t i = 0; i < important_bag.size(); ++i) {
        int ib = important_bag[i];
        if (ib < 0 || ib >= static_cast<int>(pd.bags.size()))
            throw std::invalid_argument("tree_filling: important bag out of range");
        if (i > 0 && important_bag[i] <= important_bag[i - 1])
            throw std::invalid_argument("tree_filling: fewer important bags than targets");
        const auto& bag = pd.bags[ib];
        if (std::find(bag.begin(), bag.end(), target_order[i]) == bag.end())
            throw std::invalid_argument("tree_filling: important bag misses its target");
    }

    FillContext cx;
    cx.h = g;
    cx.order_of.assign(g.vertex_count(), 0);
    cx.pd = &pd;
    cx.targets = &target_order;
    cx.important = &important_bag;
    cx.t = targets.target;
    cx.bag_with_vertex.assign(g.vertex_count(), -1);

    int total = static_cast<int>(target_order.size());
    int order = ceil_log2(total) + targets.target + 1;
    FillPiece top = fill_rec(cx, 0, total, 0, static_cast<int>(pd.bags.size()), order);

    // hang the support trees: a {supported, attach} bag on a main bag
    // containing the supported vertex, then the tree structure below
    for (const auto& rec : supports) {
        int anchor = cx.bag_with_vertex[rec.supported];
        if (anchor == -1)
            throw std::invalid_argument("tree_filling: supported vertex not in any bag");
        int link = cx.add_bag({rec.supported, rec.attach}, anchor);
        if (rec.clique) {
            // clique supports are not expected here; cover them with one bag
            std::vector<int> bag;
            for (int off = 0; off < rec.order; ++off) bag.push_back(rec.base + off);
            cx.add_bag(std::move(bag), link);
        } else {
            std::vector<int> bag_of(binomial_size(rec.order), link);
            visit_binomial_edges(0, rec.order, [&](int par, int child) {
                int id = cx.add_bag({rec.base + par, rec.base + child}, bag_of[par]);
                bag_of[child] = id;
            });
        }
    }

    FillResult out;
    out.h = std::move(cx.h);
    out.certificate = std::move(cx.cert);
    out.fill_root = top.root;
    out.fill_order = order;
    out.fill_vertex_order = std::move(cx.order_of);
    return out;
}

MccArtifacts build_mcc_pipeline(const MccInstance& inst) {
    MccArtifacts art;
    art.out = build_mcc_reduction(inst);
    art.pd = build_gprime_path_decomposition(art.out);
    art.fill = tree_filling(art.out.gprime, art.out.targets, art.out.target_order, art.pd.pd,
                            art.pd.important_bag, art.out.index.supports);
    return art;
}

namespace {

void apply_tree_coloring(std::vector<int>& colors, const SupportRecord& rec, int root_color) {
    std::vector<int> col = binomial_coloring(rec.order, root_color);
    for (int off = 0; off < binomial_size(rec.order); ++off) colors[rec.base + off] = col[off];
}

} // namespace

GrundyColoring mcc_witness_coloring(const MccArtifacts& art, const std::vector<int>& clique) {
    const MccInstance& inst = art.out.instance;
    const GadgetIndex& ix = art.out.index;
    const int k = inst.k, n = inst.n, m = inst.m(), L = ix.log_n;
    const int t = 2 * L + 4;

    if (static_cast<int>(clique.size()) != k)
        throw std::invalid_argument("mcc witness: clique must pick one vertex per part");
    for (int v : clique)
        if (v < 0 || v >= n) throw std::invalid_argument("mcc witness: clique vertex out of range");
    // every pair must be realized by an instance edge
    std::map<std::array<int, 4>, int> edge_id;
    for (int e = 0; e < m; ++e) {
        const McEdge& ed = inst.edges[e];
        edge_id[{ed.part_a, ed.idx_a, ed.part_b, ed.idx_b}] = e;
    }
    std::vector<int> clique_edge; // edge index per validator pair, lex order
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            auto it = edge_id.find({a, clique[a], b, clique[b]});
            if (it == edge_id.end())
                throw std::invalid_argument("mcc witness: clique edge missing from instance");
            clique_edge.push_back(it->second);
        }
    std::vector<char> is_clique_edge(m, 0);
    for (int e : clique_edge) is_clique_edge[e] = 1;

    std::vector<int> colors(art.fill.h.vertex_count(), 0);

    // selection gadgets: the chosen vertex's bits decide which side of each
    // matched pair carries the even color, identically in every column
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m + 1; ++j)
            for (int l = 1; l <= L; ++l) {
                int bit = (clique[i] >> (L - l)) & 1;
                colors[ix.s[i][j][2 * l - bit - 1]] = 2 * l;
                colors[ix.s[i][j][2 * l - (1 - bit) - 1]] = 2 * l - 1;
            }

    // supports: optimal by default; the edge-gadget recipes below override
    std::map<int, std::vector<const SupportRecord*>> supports_of;
    for (const auto& rec : ix.supports) supports_of[rec.supported].push_back(&rec);
    auto color_supports_optimal = [&](int v) {
        for (const SupportRecord* rec : supports_of[v]) apply_tree_coloring(colors, *rec, rec->order);
    };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m + 1; ++j)
            for (int l = 1; l <= 2 * L; ++l) color_supports_optimal(ix.s[i][j][l - 1]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m; ++j) {
            color_supports_optimal(ix.p[i][j]);
            colors[ix.p[i][j]] = t;
        }

    // edge gadgets
    for (int e = 0; e < m; ++e) {
        const McEdge& ed = inst.edges[e];
        if (is_clique_edge[e]) {
            color_supports_optimal(ix.w_x[e]);
            color_supports_optimal(ix.w_y[e]);
            colors[ix.w_x[e]] = 2 * L + 2;
            colors[ix.w_y[e]] = 2 * L + 3;
        } else {
            // per bit interval, the support tree of order 2l+1 provides the
            // color the selection neighbors miss
            auto color_w_supports = [&](int w, int part, int idx) {
                for (const SupportRecord* rec : supports_of[w]) {
                    if (rec->order == 1) {
                        apply_tree_coloring(colors, *rec, 1);
                        continue;
                    }
                    int l = (rec->order - 1) / 2; // order 2l+1
                    int bit = (idx >> (L - l)) & 1;
                    int sel = (clique[part] >> (L - l)) & 1;
                    int neighbor_color = (bit == sel) ? 2 * l : 2 * l - 1;
                    int missing = (neighbor_color == 2 * l) ? 2 * l - 1 : 2 * l;
                    apply_tree_coloring(colors, *rec, missing);
                }
            };
            color_w_supports(ix.w_x[e], ed.part_a, ed.idx_a);
            color_w_supports(ix.w_y[e], ed.part_b, ed.idx_b);
            colors[ix.w_x[e]] = 2 * L + 1;
            colors[ix.w_y[e]] = 2 * L + 2;
        }
        // checkers: the support tree matching the checked vertex's color is
        // colored sub-optimally to supply 2L+1; everything else optimal
        auto color_checker = [&](int wp, int partner_color) {
            for (const SupportRecord* rec : supports_of[wp]) {
                if (rec->order == partner_color && partner_color > 2 * L + 1)
                    apply_tree_coloring(colors, *rec, 2 * L + 1);
                else
                    apply_tree_coloring(colors, *rec, rec->order);
            }
            colors[wp] = t;
        };
        color_checker(ix.wp_x[e], colors[ix.w_x[e]]);
        color_checker(ix.wp_y[e], colors[ix.w_y[e]]);
    }

    for (const auto& [a, b, q] : ix.validators) {
        color_supports_optimal(q);
        colors[q] = t;
    }

    // filling tree: every fill vertex takes the order of its subtree
    for (int v = 0; v < art.fill.h.vertex_count(); ++v)
        if (art.fill.fill_vertex_order[v] > 0) colors[v] = art.fill.fill_vertex_order[v];

    GrundyColoring out;
    out.colors = std::move(colors);
    out.max_color = *std::max_element(out.colors.begin(), out.colors.end());
    return out;
}

MccInstance read_mcc_instance(std::istream& in) {
    MccInstance inst;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "mcc") {
            int m = 0;
            if (!(ls >> inst.k >> inst.n >> m)) throw std::invalid_argument("mcc format: bad header");
            header = true;
            continue;
        }
        if (!header) throw std::invalid_argument("mcc format: edge before header");
        McEdge e;
        e.part_a = std::stoi(head);
        if (!(ls >> e.idx_a >> e.part_b >> e.idx_b))
            throw std::invalid_argument("mcc format: bad edge line");
        --e.part_a;
        --e.part_b;
        if (e.part_a > e.part_b) {
            std::swap(e.part_a, e.part_b);
            std::swap(e.idx_a, e.idx_b);
        }
        inst.edges.push_back(e);
    }
    if (!header) throw std::invalid_argument("mcc format: missing header");
    inst.validate();
    return inst;
}

std::string mcc_instance_to_string(const MccInstance& inst) {
    std::ostringstream os;
    os << "mcc " << inst.k << " " << inst.n << " " << inst.m() << "\n";
    for (const auto& e : inst.edges)
        os << (e.part_a + 1) << " " << e.idx_a << " " << (e.part_b + 1) << " " << e.idx_b << "\n";
    return os.str();
}

} // namespace grundy
