#include "grundy/solver_modular.hpp"

#include "grundy/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace grundy {

bool TwinPartition::quotient_adjacent(int a, int b) const {
    if (a == b) return false;
    const auto& qa = quotient[a];
    return std::binary_search(qa.begin(), qa.end(), b);
}

TwinPartition compute_twin_classes(const Graph& g) {
    int n = g.vertex_count();
    TwinPartition p;
    // group by open neighborhood (false twins) and closed neighborhood
    // (true twins); no vertex has both kinds of twin, so the groups merge
    // into a well-defined partition
    std::map<std::vector<int>, std::vector<int>> open, closed;
    for (int v = 0; v < n; ++v) {
        open[g.neighbors(v)].push_back(v);
        std::vector<int> cl = g.neighbors(v);
        cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
        closed[cl].push_back(v);
    }
    std::vector<int> class_of(n, -1);
    auto start_class = [&](const std::vector<int>& members, TwinPartition::Kind kind) {
        for (int v : members) class_of[v] = p.count();
        p.classes.push_back(members);
        p.kinds.push_back(kind);
    };
    for (int v = 0; v < n; ++v) {
        if (class_of[v] != -1) continue;
        const auto& false_mates = open[g.neighbors(v)];
        if (false_mates.size() > 1) {
            start_class(false_mates, TwinPartition::Kind::FalseTwin);
            continue;
        }
        std::vector<int> cl = g.neighbors(v);
        cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
        const auto& true_mates = closed[cl];
        if (true_mates.size() > 1) {
            start_class(true_mates, TwinPartition::Kind::TrueTwin);
            continue;
        }
        start_class({v}, TwinPartition::Kind::Singleton);
    }
    // quotient adjacency: between classes the connection is complete or empty
    p.quotient.assign(p.count(), {});
    for (int a = 0; a < p.count(); ++a) {
        int va = p.classes[a][0];
        for (int b = a + 1; b < p.count(); ++b) {
            int vb = p.classes[b][0];
            if (g.has_edge(va, vb)) {
                p.quotient[a].push_back(b);
                p.quotient[b].push_back(a);
            }
        }
    }
    for (auto& q : p.quotient) std::sort(q.begin(), q.end());
    return p;
}

Graph reduce_false_twins(const Graph& g, const TwinPartition& p,
                         std::vector<int>* representative_of) {
    int n = g.vertex_count();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::vector<char> keep(n, 1);
    for (int c = 0; c < p.count(); ++c) {
        if (p.kinds[c] != TwinPartition::Kind::FalseTwin) continue;
        int lead = *std::min_element(p.classes[c].begin(), p.classes[c].end());
        for (int v : p.classes[c])
            if (v != lead) {
                keep[v] = 0;
                rep[v] = lead;
            }
    }
    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
        if (keep[v]) kept.push_back(v);
    std::vector<int> new_id(n, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) new_id[kept[i]] = static_cast<int>(i);
    if (representative_of) {
        representative_of->assign(n, -1);
        for (int v = 0; v < n; ++v) (*representative_of)[v] = new_id[rep[v]];
    }
    return g.induced(kept);
}

std::vector<uint64_t> enumerate_patterns(const TwinPartition& p, long long limit) {
    int w = p.count();
    for (int c = 0; c < w; ++c)
        if (p.kinds[c] == TwinPartition::Kind::FalseTwin && p.classes[c].size() > 1)
            throw std::invalid_argument("enumerate_patterns: reduce false twins first");
    if (w > 64) throw budget_exceeded("enumerate_patterns: more than 64 twin classes");
    std::vector<uint64_t> adj(w, 0);
    for (int a = 0; a < w; ++a)
        for (int b : p.quotient[a]) adj[a] |= uint64_t{1} << b;
    std::vector<uint64_t> out;
    // grow independent sets over classes in increasing index order
    std::vector<std::pair<int, uint64_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [next, cur] = stack.back();
        stack.pop_back();
        for (int c = next; c < w; ++c) {
            if (adj[c] & cur) continue;
            uint64_t ext = cur | (uint64_t{1} << c);
            out.push_back(ext);
            if (limit >= 0 && static_cast<long long>(out.size()) > limit)
                throw budget_exceeded("enumerate_patterns: pattern budget exceeded");
            stack.emplace_back(c + 1, ext);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// can `later` be placed after `earlier`: every class of `later` equals or is
// quotient-adjacent to some class of `earlier`
bool pattern_ok(uint64_t later, uint64_t earlier, const std::vector<uint64_t>& adj_or_self) {
    for (uint64_t rest = later; rest;) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        if (!(adj_or_self[i] & earlier)) return false;
    }
    return true;
}

std::vector<uint64_t> adj_or_self_masks(const TwinPartition& p) {
    int w = p.count();
    std::vector<uint64_t> masks(w);
    for (int a = 0; a < w; ++a) {
        masks[a] = uint64_t{1} << a;
        for (int b : p.quotient[a]) masks[a] |= uint64_t{1} << b;
    }
    return masks;
}

} // namespace

std::optional<std::vector<uint64_t>> is_eligible(const std::vector<uint64_t>& patterns,
                                                 const TwinPartition& p) {
    int m = static_cast<int>(patterns.size());
    if (m == 0) return std::vector<uint64_t>{};
    if (m > 25) throw budget_exceeded("is_eligible: too many patterns for the subset DP");
    auto masks = adj_or_self_masks(p);
    std::vector<std::vector<char>> ok(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) ok[i][j] = pattern_ok(patterns[i], patterns[j], masks);
    // f[S]: S can be ordered; pick the last element, which must be ok
    // against every other member of S
    thread_local std::vector<char> feasible;
    thread_local std::vector<int8_t> last;
    feasible.assign(std::size_t{1} << m, 0);
    last.assign(std::size_t{1} << m, -1);
    feasible[0] = 1;
    for (uint32_t s = 1; s < (uint32_t{1} << m); ++s) {
        for (uint32_t rest = s; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (!feasible[s & ~(uint32_t{1} << i)]) continue;
            bool all_ok = true;
            for (uint32_t r2 = s & ~(uint32_t{1} << i); r2;) {
                int j = std::countr_zero(r2);
                r2 &= r2 - 1;
                if (!ok[i][j]) {
                    all_ok = false;
                    break;
                }
            }
            if (all_ok) {
                feasible[s] = 1;
                last[s] = static_cast<int8_t>(i);
                break;
            }
        }
    }
    uint32_t full = (uint32_t{1} << m) - 1;
    if (!feasible[full]) return std::nullopt;
    std::vector<uint64_t> order(m);
    uint32_t s = full;
    for (int pos = m - 1; pos >= 0; --pos) {
        int i = last[s];
        order[pos] = patterns[i];
        s &= ~(uint32_t{1} << i);
    }
    return order;
}

std::optional<PatternSolution> solve_pattern_program(const PatternProgram& prog,
                                                     bool allow_zero) {
    int m = static_cast<int>(prog.patterns.size());
    int w = static_cast<int>(prog.class_sizes.size());
    for (int c = 0; c < w; ++c)
        if (prog.class_sizes[c] < 1)
            throw std::invalid_argument("pattern program: class size < 1");
    // every class must be covered by some pattern
    uint64_t all = w == 64 ? ~uint64_t{0} : (uint64_t{1} << w) - 1;
    uint64_t covered = 0;
    for (uint64_t pat : prog.patterns) covered |= pat;
    if (covered != all) return std::nullopt;
    // classes whose last covering pattern is index i get pinned there
    std::vector<std::vector<int>> pinned(m);
    for (int c = 0; c < w; ++c) {
        for (int i = m - 1; i >= 0; --i)
            if (prog.patterns[i] & (uint64_t{1} << c)) {
                pinned[i].push_back(c);
                break;
            }
    }
    std::vector<int> residual(prog.class_sizes);
    std::vector<int> later_cover(w, 0); // patterns not yet processed covering class
    for (int c = 0; c < w; ++c)
        for (uint64_t pat : prog.patterns)
            if (pat & (uint64_t{1} << c)) ++later_cover[c];

    std::vector<int> x(m, 0), best_x;
    long long best = -1;
    int lb = allow_zero ? 0 : 1;

    auto rec = [&](auto&& self, int i, long long sum) -> void {
        if (i == m) {
            bool done = true;
            for (int c = 0; c < w; ++c)
                if (residual[c] != 0) {
                    done = false;
                    break;
                }
            if (done && sum > best) {
                best = sum;
                best_x = x;
            }
            return;
        }
        // bounds for x_i
        int hi = std::numeric_limits<int>::max();
        int lo = lb;
        for (uint64_t rest = prog.patterns[i]; rest;) {
            int c = std::countr_zero(rest);
            rest &= rest - 1;
            // leave room for mandatory later occurrences
            int reserve = lb * (later_cover[c] - 1);
            hi = std::min(hi, residual[c] - reserve);
        }
        for (int c : pinned[i]) {
            lo = std::max(lo, residual[c]);
            hi = std::min(hi, residual[c]);
        }
        if (hi < lo) return;
        // optimistic bound: everything left can still be spent as objective
        for (int v = hi; v >= lo; --v) {
            x[i] = v;
            for (uint64_t rest = prog.patterns[i]; rest;) {
                int c = std::countr_zero(rest);
                rest &= rest - 1;
                residual[c] -= v;
                --later_cover[c];
            }
            long long optimistic = sum + v;
            for (int j = i + 1; j < m; ++j) {
                int cap = std::numeric_limits<int>::max();
                for (uint64_t rest = prog.patterns[j]; rest;) {
                    int c = std::countr_zero(rest);
                    rest &= rest - 1;
                    cap = std::min(cap, residual[c]);
                }
                optimistic += std::max(cap, 0);
            }
            if (optimistic > best) self(self, i + 1, sum + v);
            for (uint64_t rest = prog.patterns[i]; rest;) {
                int c = std::countr_zero(rest);
                rest &= rest - 1;
                residual[c] += v;
                ++later_cover[c];
            }
        }
        x[i] = 0;
    };
    rec(rec, 0, 0);
    if (best < 0) return std::nullopt;
    return PatternSolution{best, best_x};
}

namespace {

struct ReducedGraph {
    Graph graph;
    std::vector<int> rep; // original vertex -> vertex of the reduced graph
};

// iterate false-twin reduction until every class is a clique or singleton
ReducedGraph fully_reduce(const Graph& g) {
    ReducedGraph out;
    out.graph = g;
    out.rep.resize(g.vertex_count());
    std::iota(out.rep.begin(), out.rep.end(), 0);
    for (;;) {
        TwinPartition p = compute_twin_classes(out.graph);
        bool has_false = false;
        for (int c = 0; c < p.count(); ++c)
            if (p.kinds[c] == TwinPartition::Kind::FalseTwin && p.classes[c].size() > 1) {
                has_false = true;
                break;
            }
        if (!has_false) return out;
        std::vector<int> step;
        out.graph = reduce_false_twins(out.graph, p, &step);
        for (int& r : out.rep) r = step[r];
    }
}

} // namespace

NdResult gamma_nd(const Graph& g, bool relaxed_ilp) {
    NdResult result;
    result.coloring.colors.assign(g.vertex_count(), 0);
    if (g.vertex_count() == 0) return result;

    ReducedGraph red = fully_reduce(g);
    TwinPartition p = compute_twin_classes(red.graph);
    int w = p.count();
    std::vector<uint64_t> patterns = enumerate_patterns(p, 64);

    std::vector<int> class_sizes(w);
    for (int c = 0; c < w; ++c) class_sizes[c] = static_cast<int>(p.classes[c].size());
    uint64_t all_classes = (w == 64) ? ~uint64_t{0} : (uint64_t{1} << w) - 1;

    long long best = -1;
    std::vector<uint64_t> best_order;
    std::vector<int> best_x;

    // recursive subcollection enumeration; eligibility is downward closed,
    // so an ineligible partial set prunes its whole branch
    std::vector<uint64_t> current;
    auto consider = [&](const std::vector<uint64_t>& order) {
        PatternProgram prog;
        prog.patterns = order; // aligned with the eligible ordering
        prog.class_sizes = class_sizes;
        auto sol = solve_pattern_program(prog, relaxed_ilp);
        if (sol && sol->objective > best) {
            best = sol->objective;
            best_order = order;
            best_x = sol->x;
        }
    };
    int np = static_cast<int>(patterns.size());
    std::vector<uint64_t> suffix_cover(np + 1, 0);
    for (int j = np - 1; j >= 0; --j) suffix_cover[j] = suffix_cover[j + 1] | patterns[j];
    // the eligible family can still be huge on sparse quotients with many
    // classes; cap the walk (weighted by the eligibility-DP size) so
    // oversized inputs abort instead of spinning
    long long work = 0;
    constexpr long long kWorkBudget = 50'000'000;
    auto charge = [&](long long amount) {
        work += amount;
        if (work > kWorkBudget)
            throw budget_exceeded("gamma_nd: subcollection enumeration budget exceeded");
    };
    auto rec = [&](auto&& self, int idx, uint64_t covered) -> void {
        charge(1 + (int64_t{1} << std::min<std::size_t>(current.size() + 1, 25)));
        if ((covered | suffix_cover[idx]) != all_classes) return; // cannot cover the rest
        if (idx == np) {
            if (covered != all_classes || current.empty()) return;
            auto order = is_eligible(current, p);
            if (!order) return;
            if (!relaxed_ilp) consider(*order);
            else {
                // maximal collections only: skip if some unused pattern keeps it eligible
                for (int j = 0; j < np; ++j) {
                    if (std::find(current.begin(), current.end(), patterns[j]) != current.end())
                        continue;
                    auto bigger = current;
                    bigger.push_back(patterns[j]);
                    if (is_eligible(bigger, p)) return;
                }
                consider(*order);
            }
            return;
        }
        // include patterns[idx]
        current.push_back(patterns[idx]);
        if (is_eligible(current, p)) self(self, idx + 1, covered | patterns[idx]);
        current.pop_back();
        // exclude
        self(self, idx + 1, covered);
    };
    rec(rec, 0, 0);

    if (best < 0) {
        // n >= 1 always admits at least the all-singletons chain; this
        // indicates a logic error rather than an input condition
        throw std::logic_error("gamma_nd: no eligible covering subcollection found");
    }

    result.gamma = static_cast<int>(best);
    // assemble the witness: the first pattern of the order takes colors
    // 1..x_1, the next the following block, and so on; each class hands out
    // its vertices in id order
    std::vector<int> reduced_colors(red.graph.vertex_count(), 0);
    std::vector<std::size_t> next_in_class(w, 0);
    int color = 1;
    for (std::size_t bi = 0; bi < best_order.size(); ++bi) {
        for (int rep = 0; rep < best_x[bi]; ++rep) {
            for (uint64_t restp = best_order[bi]; restp;) {
                int c = std::countr_zero(restp);
                restp &= restp - 1;
                reduced_colors[p.classes[c][next_in_class[c]++]] = color;
            }
            ++color;
        }
    }
    result.coloring.max_color = result.gamma;
    for (int v = 0; v < g.vertex_count(); ++v)
        result.coloring.colors[v] = reduced_colors[red.rep[v]];
    return result;
}

namespace {

// smallest module containing {x, y}: close under splitters
std::vector<int> smallest_module(const Graph& g, int x, int y) {
    int n = g.vertex_count();
    std::vector<char> in(n, 0);
    in[x] = in[y] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < n; ++u) {
            if (in[u]) continue;
            // u splits the set if it is adjacent to some but not all members
            bool adj_some = false, nonadj_some = false;
            for (int v = 0; v < n; ++v) {
                if (!in[v]) continue;
                if (g.has_edge(u, v)) adj_some = true;
                else nonadj_some = true;
                if (adj_some && nonadj_some) break;
            }
            if (adj_some && nonadj_some) {
                in[u] = 1;
                grew = true;
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> components_of(const Graph& g, bool complement) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = nc;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (!complement) {
                for (int w : g.neighbors(v))
                    if (comp[w] == -1) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
            } else {
                for (int w = 0; w < n; ++w)
                    if (w != v && comp[w] == -1 && !g.has_edge(v, w)) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

} // namespace

std::vector<std::vector<int>> modular_partition(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("modular_partition: need at least 2 vertices");
    auto comps = components_of(g, false);
    if (comps.size() > 1) return comps;
    auto cocomps = components_of(g, true);
    if (cocomps.size() > 1) return cocomps;
    // connected and co-connected: maximal proper strong modules are the
    // classes of "the smallest module containing {x,y} is proper"
    std::vector<int> cls(n);
    std::iota(cls.begin(), cls.end(), 0);
    auto find = [&](int v) {
        while (cls[v] != v) v = cls[v] = cls[cls[v]];
        return v;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (find(x) == find(y)) continue;
            if (static_cast<int>(smallest_module(g, x, y).size()) < n) cls[find(y)] = find(x);
        }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (slot[r] == -1) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(v);
    }
    return out;
}

int gamma_mw(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (n == 1) return 1;
    if (g.is_clique()) return n;
    if (g.is_edgeless()) return 1;
    auto modules = modular_partition(g);
    // For disconnected or co-disconnected graphs the union of all parts but
    // the first is itself a module, so a wide partition may be split
    // binarily. This keeps the twin-class count of the quotient bounded
    // where component counts are not.
    if (modules.size() > 2) {
        auto comps = g.is_connected() ? components_of(g, true) : components_of(g, false);
        if (comps.size() > 2) {
            std::vector<int> rest;
            for (std::size_t i = 1; i < comps.size(); ++i)
                rest.insert(rest.end(), comps[i].begin(), comps[i].end());
            std::sort(rest.begin(), rest.end());
            modules = {comps[0], rest};
        }
    }
    // replace each complex module by a clique of its (recursive) Grundy
    // number; clique and independent modules are left for gamma_nd
    Graph h;
    std::vector<std::vector<int>> new_ids(modules.size());
    for (std::size_t mi = 0; mi < modules.size(); ++mi) {
        Graph sub = g.induced(modules[mi]);
        int size;
        if (sub.is_clique() || sub.is_edgeless()) {
            size = sub.vertex_count();
            for (int q = 0; q < size; ++q) new_ids[mi].push_back(h.add_vertex());
            for (auto [a, b] : sub.edges()) h.add_edge(new_ids[mi][a], new_ids[mi][b]);
        } else {
            size = gamma_mw(sub);
            for (int q = 0; q < size; ++q) new_ids[mi].push_back(h.add_vertex());
            for (int a = 0; a < size; ++a)
                for (int b = a + 1; b < size; ++b) h.add_edge(new_ids[mi][a], new_ids[mi][b]);
        }
    }
    // between modules the connection is complete or empty
    for (std::size_t a = 0; a < modules.size(); ++a)
        for (std::size_t b = a + 1; b < modules.size(); ++b)
            if (g.has_edge(modules[a][0], modules[b][0]))
                for (int u : new_ids[a])
                    for (int v : new_ids[b]) h.add_edge(u, v);
    return gamma_nd(h).gamma;
}

} // namespace grundy
