#include "grundy/decomposition.hpp"

#include "grundy/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace grundy {

namespace {

int width_of(const std::vector<std::vector<int>>& bags) {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

DecompVerdict verify_impl(const Graph& g, const std::vector<std::vector<int>>& bags,
                          const std::vector<std::pair<int, int>>& bag_edges) {
    DecompVerdict out;
    out.width = width_of(bags);
    int nb = static_cast<int>(bags.size());
    if (nb == 0) {
        out.violations.push_back("no bags");
        return out;
    }
    for (const auto& b : bags)
        for (int v : b)
            if (v < 0 || v >= g.vertex_count()) {
                out.violations.push_back("bag vertex out of range");
                return out;
            }
    // bag tree well-formed
    if (static_cast<int>(bag_edges.size()) != nb - 1) {
        out.violations.push_back("bag edges do not form a tree (count)");
        return out;
    }
    std::vector<std::vector<int>> btree(nb);
    for (auto [a, b] : bag_edges) {
        if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
            out.violations.push_back("bad bag edge");
            return out;
        }
        btree[a].push_back(b);
        btree[b].push_back(a);
    }
    {
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : btree[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        if (cnt != nb) {
            out.violations.push_back("bag edges do not form a tree (disconnected)");
            return out;
        }
    }
    // vertex coverage + connectivity
    std::vector<std::vector<int>> bags_of(g.vertex_count());
    for (int i = 0; i < nb; ++i)
        for (int v : bags[i]) bags_of[v].push_back(i);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (bags_of[v].empty()) {
            out.violations.push_back("vertex " + std::to_string(v) + " in no bag");
            continue;
        }
        std::vector<char> inset(nb, 0);
        for (int i : bags_of[v]) inset[i] = 1;
        std::vector<int> stack{bags_of[v][0]};
        std::vector<char> seen(nb, 0);
        seen[stack[0]] = 1;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : btree[x])
                if (inset[y] && !seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        if (cnt != bags_of[v].size())
            out.violations.push_back("bags of vertex " + std::to_string(v) +
                                     " are not connected");
    }
    // edge coverage
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        const auto& smaller = bags_of[u].size() <= bags_of[v].size() ? bags_of[u] : bags_of[v];
        int other = bags_of[u].size() <= bags_of[v].size() ? v : u;
        for (int i : smaller)
            if (std::binary_search(bags[i].begin(), bags[i].end(), other)) {
                covered = true;
                break;
            }
        if (!covered)
            out.violations.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") not covered");
    }
    out.valid = out.violations.empty();
    return out;
}

} // namespace

int TreeDecomposition::width() const { return width_of(bags); }
int PathDecomposition::width() const { return width_of(bags); }

DecompVerdict verify_decomposition(const Graph& g, const TreeDecomposition& d) {
    auto bags = d.bags;
    for (auto& b : bags) b = sorted_unique(std::move(b));
    return verify_impl(g, bags, d.edges);
}

DecompVerdict verify_decomposition(const Graph& g, const PathDecomposition& d) {
    return verify_decomposition(g, to_tree(d));
}

TreeDecomposition to_tree(const PathDecomposition& d) {
    TreeDecomposition t;
    t.bags = d.bags;
    for (int i = 0; i + 1 < static_cast<int>(d.bags.size()); ++i) t.edges.emplace_back(i, i + 1);
    return t;
}

TreeDecomposition to_nice(const TreeDecomposition& d) {
    if (d.bags.empty()) throw std::invalid_argument("to_nice: empty decomposition");
    // normalize + contract redundant bags (bag a subset of adjacent bag b)
    std::vector<std::vector<int>> bags = d.bags;
    for (auto& b : bags) b = sorted_unique(std::move(b));
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : d.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> dead(bags.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < bags.size(); ++a) {
            if (dead[a]) continue;
            for (int b : adj[a]) {
                if (dead[b] || static_cast<std::size_t>(b) == a) continue;
                if (std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(),
                                  bags[a].end())) {
                    // splice a's other neighbors onto b
                    dead[a] = 1;
                    for (int c : adj[a])
                        if (c != b && !dead[c]) {
                            adj[b].push_back(c);
                            adj[c].push_back(b);
                        }
                    changed = true;
                    break;
                }
            }
        }
    }
    int root_orig = -1;
    for (std::size_t i = 0; i < bags.size(); ++i)
        if (!dead[i]) {
            root_orig = static_cast<int>(i);
            break;
        }

    TreeDecomposition out;
    std::vector<std::pair<int, int>> out_edges; // child -> parent links, root fixed later
    auto new_node = [&](std::vector<int> bag) {
        out.bags.push_back(std::move(bag));
        return static_cast<int>(out.bags.size()) - 1;
    };
    auto link = [&](int parent, int child) { out_edges.emplace_back(parent, child); };

    // Builds the nice subtree for original node `x` (entered from `from`);
    // returns the id of a nice node whose bag equals bags[x].
    std::function<int(int, int)> build = [&](int x, int from) -> int {
        std::vector<int> kids;
        for (int y : adj[x])
            if (y != from && !dead[y]) kids.push_back(y);
        // chains from each child bag up to this bag
        std::vector<int> child_tops;
        for (int y : kids) {
            int below = build(y, x);
            // forget what is in bags[y] but not bags[x], then introduce the rest
            std::vector<int> cur = bags[y];
            int node = below;
            for (int v : bags[y])
                if (!std::binary_search(bags[x].begin(), bags[x].end(), v)) {
                    cur.erase(std::find(cur.begin(), cur.end(), v));
                    int nn = new_node(cur);
                    link(nn, node);
                    node = nn;
                }
            for (int v : bags[x])
                if (!std::binary_search(bags[y].begin(), bags[y].end(), v)) {
                    cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
                    int nn = new_node(cur);
                    link(nn, node);
                    node = nn;
                }
            child_tops.push_back(node);
        }
        if (child_tops.empty()) {
            // leaf: empty bag, then introduce everything in bags[x]
            int node = new_node({});
            std::vector<int> cur;
            for (int v : bags[x]) {
                cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
                int nn = new_node(cur);
                link(nn, node);
                node = nn;
            }
            return node;
        }
        // fold children with join nodes (all bags equal bags[x])
        int node = child_tops[0];
        for (std::size_t i = 1; i < child_tops.size(); ++i) {
            int join = new_node(bags[x]);
            link(join, node);
            link(join, child_tops[i]);
            node = join;
        }
        return node;
    };

    int top = build(root_orig, -1);
    // forget chain above the original root, ending at the empty root bag
    std::vector<int> cur = bags[root_orig];
    int node = top;
    while (!cur.empty()) {
        cur.pop_back();
        int nn = new_node(cur);
        link(nn, node);
        node = nn;
    }
    // make the final (empty) node index 0 by swapping labels
    int last = node;
    if (last != 0) {
        std::swap(out.bags[0], out.bags[last]);
        for (auto& [a, b] : out_edges) {
            if (a == 0) a = last;
            else if (a == last) a = 0;
            if (b == 0) b = last;
            else if (b == last) b = 0;
        }
    }
    out.edges = out_edges;
    return out;
}

std::vector<NiceNode> classify_nice(const TreeDecomposition& d) {
    int nb = static_cast<int>(d.bags.size());
    if (nb == 0) throw std::invalid_argument("classify_nice: empty decomposition");
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : d.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (!d.bags[0].empty()) throw std::invalid_argument("classify_nice: root bag not empty");
    std::vector<NiceNode> nodes(nb);
    std::vector<int> parent(nb, -1);
    std::vector<int> order;
    order.reserve(nb);
    order.push_back(0);
    parent[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int x = order[h];
        for (int y : adj[x])
            if (parent[y] == -1) {
                parent[y] = x;
                nodes[x].children.push_back(y);
                order.push_back(y);
            }
    }
    if (static_cast<int>(order.size()) != nb)
        throw std::invalid_argument("classify_nice: bag tree disconnected");
    for (int x = 0; x < nb; ++x) {
        auto& node = nodes[x];
        const auto& bag = d.bags[x];
        if (node.children.empty()) {
            if (!bag.empty()) throw std::invalid_argument("classify_nice: non-empty leaf bag");
            node.kind = NiceKind::Leaf;
        } else if (node.children.size() == 2) {
            if (d.bags[node.children[0]] != bag || d.bags[node.children[1]] != bag)
                throw std::invalid_argument("classify_nice: join bags differ");
            node.kind = NiceKind::Join;
        } else if (node.children.size() == 1) {
            const auto& cb = d.bags[node.children[0]];
            std::vector<int> diff;
            if (bag.size() == cb.size() + 1) {
                std::set_difference(bag.begin(), bag.end(), cb.begin(), cb.end(),
                                    std::back_inserter(diff));
                if (diff.size() != 1)
                    throw std::invalid_argument("classify_nice: bad introduce node");
                node.kind = NiceKind::Introduce;
                node.vertex = diff[0];
            } else if (cb.size() == bag.size() + 1) {
                std::set_difference(cb.begin(), cb.end(), bag.begin(), bag.end(),
                                    std::back_inserter(diff));
                if (diff.size() != 1)
                    throw std::invalid_argument("classify_nice: bad forget node");
                node.kind = NiceKind::Forget;
                node.vertex = diff[0];
            } else {
                throw std::invalid_argument("classify_nice: unary node is neither "
                                            "introduce nor forget");
            }
        } else {
            throw std::invalid_argument("classify_nice: node with >2 children");
        }
    }
    return nodes;
}

namespace {

// reachable-outside count for the treewidth recurrence: vertices outside
// s+{v} connected to v through s
int q_value(const std::vector<uint64_t>& adj, int n, uint64_t s, int v) {
    uint64_t visited = uint64_t{1} << v;
    uint64_t frontier = visited;
    uint64_t result = 0;
    while (frontier) {
        int x = std::countr_zero(frontier);
        frontier &= frontier - 1;
        uint64_t next = adj[x] & ~visited;
        visited |= next;
        result |= next & ~s;
        frontier |= next & s;
    }
    (void)n;
    return std::popcount(result & ~(uint64_t{1} << v));
}

} // namespace

std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) throw budget_exceeded("exact_treewidth: n > 12");
    if (n == 0) return {-1, TreeDecomposition{{{}}, {}}};
    auto adj = g.adjacency_masks();
    uint64_t full = (uint64_t{1} << n) - 1;
    std::vector<int> tw(std::size_t{1} << n, 0);
    for (uint64_t s = 1; s <= full; ++s) {
        int best = std::numeric_limits<int>::max();
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint64_t prev = s & ~(uint64_t{1} << v);
            best = std::min(best, std::max(tw[prev], q_value(adj, n, prev, v)));
        }
        tw[s] = best;
    }
    // reconstruct an elimination order (last eliminated first)
    std::vector<int> order(n);
    uint64_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        int pick = -1;
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint64_t prev = s & ~(uint64_t{1} << v);
            if (std::max(tw[prev], q_value(adj, n, prev, v)) == tw[s]) {
                pick = v;
                break;
            }
        }
        order[pos] = pick;
        s &= ~(uint64_t{1} << pick);
    }
    // bags from the elimination order on the fill-in graph
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<uint64_t> fill = adj;
    TreeDecomposition td;
    td.bags.assign(n, {});
    std::vector<int> bag_later_min(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        uint64_t later = 0;
        for (int j = i + 1; j < n; ++j) later |= uint64_t{1} << order[j];
        uint64_t nb = fill[v] & later;
        td.bags[i].push_back(v);
        int first_later = -1;
        for (int j = i + 1; j < n; ++j)
            if (nb & (uint64_t{1} << order[j])) {
                td.bags[i].push_back(order[j]);
                if (first_later == -1) first_later = j;
            }
        std::sort(td.bags[i].begin(), td.bags[i].end());
        bag_later_min[i] = first_later;
        // eliminate: make nb a clique
        for (uint64_t r1 = nb; r1;) {
            int a = std::countr_zero(r1);
            r1 &= r1 - 1;
            fill[a] |= nb & ~(uint64_t{1} << a);
        }
    }
    for (int i = 0; i < n; ++i) {
        int p = bag_later_min[i];
        if (p == -1) p = (i + 1 < n) ? i + 1 : -1; // isolated tail: chain on
        if (p != -1) td.edges.emplace_back(i, p);
    }
    return {tw[full], td};
}

std::pair<int, PathDecomposition> exact_pathwidth(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) throw budget_exceeded("exact_pathwidth: n > 12");
    if (n == 0) return {-1, PathDecomposition{{{}}}};
    auto adj = g.adjacency_masks();
    uint64_t full = (uint64_t{1} << n) - 1;
    auto boundary = [&](uint64_t s) {
        int b = 0;
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & ~s) ++b;
        }
        return b;
    };
    std::vector<int> vs(std::size_t{1} << n, 0);
    for (uint64_t s = 1; s <= full; ++s) {
        int best = std::numeric_limits<int>::max();
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            best = std::min(best, vs[s & ~(uint64_t{1} << v)]);
        }
        vs[s] = std::max(best, boundary(s));
    }
    // reconstruct layout
    std::vector<int> order(n);
    uint64_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        int pick = -1;
        for (uint64_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint64_t prev = s & ~(uint64_t{1} << v);
            if (std::max(vs[prev], boundary(s)) == vs[s]) {
                pick = v;
                break;
            }
        }
        order[pos] = pick;
        s &= ~(uint64_t{1} << pick);
    }
    PathDecomposition pd;
    uint64_t placed = 0;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> bag{v};
        for (uint64_t rest = placed; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[u] & ~placed) bag.push_back(u);
        }
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
        placed |= uint64_t{1} << v;
    }
    return {vs[full], pd};
}

TreeDecomposition decomposition_of_tree(const Graph& g) {
    int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    // one bag per component root, one bag per discovered edge; components
    // chained onto the previous bag to keep the bag graph a tree
    std::vector<int> vertex_bag(n, -1);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (vertex_bag[start] != -1) continue;
        ++components;
        vertex_bag[start] = static_cast<int>(td.bags.size());
        td.bags.push_back({start});
        if (vertex_bag[start] > 0) td.edges.emplace_back(vertex_bag[start] - 1, vertex_bag[start]);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (vertex_bag[w] != -1) continue;
                int b = static_cast<int>(td.bags.size());
                std::vector<int> bag{v, w};
                std::sort(bag.begin(), bag.end());
                td.bags.push_back(std::move(bag));
                td.edges.emplace_back(vertex_bag[v], b);
                vertex_bag[w] = b;
                stack.push_back(w);
            }
        }
    }
    if (g.edge_count() != n - components)
        throw std::invalid_argument("decomposition_of_tree: not a forest");
    return td;
}

namespace {

std::vector<std::vector<int>> parse_bag_list(const std::string& text, std::size_t& pos) {
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[')
        throw std::invalid_argument("decomposition format: expected [");
    ++pos;
    std::vector<std::vector<int>> out;
    skip_ws();
    while (pos < text.size() && text[pos] != ']') {
        if (text[pos] == ',') {
            ++pos;
            skip_ws();
            continue;
        }
        if (text[pos] != '[')
            throw std::invalid_argument("decomposition format: expected inner [");
        ++pos;
        std::vector<int> bag;
        while (pos < text.size() && text[pos] != ']') {
            if (text[pos] == ',' || text[pos] == ' ') {
                ++pos;
                continue;
            }
            std::size_t used = 0;
            int v = std::stoi(text.substr(pos), &used);
            bag.push_back(v);
            pos += used;
        }
        if (pos >= text.size()) throw std::invalid_argument("decomposition format: unclosed [");
        ++pos; // ]
        out.push_back(std::move(bag));
        skip_ws();
    }
    if (pos >= text.size()) throw std::invalid_argument("decomposition format: unclosed [");
    ++pos; // ]
    return out;
}

void print_bag_list(std::ostringstream& os, const std::vector<std::vector<int>>& bags) {
    os << "[";
    for (std::size_t i = 0; i < bags.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < bags[i].size(); ++j) {
            if (j) os << ",";
            os << bags[i][j];
        }
        os << "]";
    }
    os << "]";
}

} // namespace

std::string tree_decomposition_to_string(const TreeDecomposition& d) {
    std::ostringstream os;
    os << "bags: ";
    print_bag_list(os, d.bags);
    os << "\nedges: ";
    std::vector<std::vector<int>> ee;
    ee.reserve(d.edges.size());
    for (auto [a, b] : d.edges) ee.push_back({a, b});
    print_bag_list(os, ee);
    os << "\n";
    return os.str();
}

std::string path_decomposition_to_string(const PathDecomposition& d) {
    std::ostringstream os;
    os << "bags: ";
    print_bag_list(os, d.bags);
    os << "\n";
    return os.str();
}

namespace {

bool find_section(const std::string& text, const std::string& key, std::size_t& pos) {
    std::size_t k = text.find(key + ":");
    if (k == std::string::npos) return false;
    pos = k + key.size() + 1;
    return true;
}

} // namespace

TreeDecomposition tree_decomposition_from_string(const std::string& text) {
    TreeDecomposition d;
    std::size_t pos = 0;
    if (!find_section(text, "bags", pos))
        throw std::invalid_argument("decomposition format: missing bags");
    d.bags = parse_bag_list(text, pos);
    std::size_t epos = 0;
    if (!find_section(text, "edges", epos))
        throw std::invalid_argument("decomposition format: missing edges");
    for (const auto& e : parse_bag_list(text, epos)) {
        if (e.size() != 2) throw std::invalid_argument("decomposition format: bad edge");
        d.edges.emplace_back(e[0], e[1]);
    }
    return d;
}

PathDecomposition path_decomposition_from_string(const std::string& text) {
    PathDecomposition d;
    std::size_t pos = 0;
    if (!find_section(text, "bags", pos))
        throw std::invalid_argument("decomposition format: missing bags");
    d.bags = parse_bag_list(text, pos);
    return d;
}

} // namespace grundy
