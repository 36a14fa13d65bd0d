#include "grundy/coloring.hpp"

#include "grundy/errors.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace grundy {

GrundyColoring first_fit(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("first_fit: order is not a permutation");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("first_fit: order is not a permutation");
        seen[v] = 1;
    }
    GrundyColoring out;
    out.colors.assign(n, 0);
    std::vector<int> stamp(n + 2, -1);
    for (int idx = 0; idx < n; ++idx) {
        int v = order[idx];
        for (int w : g.neighbors(v))
            if (out.colors[w] > 0) stamp[out.colors[w]] = idx;
        int c = 1;
        while (stamp[c] == idx) ++c;
        out.colors[v] = c;
        out.max_color = std::max(out.max_color, c);
    }
    return out;
}

Verdict verify_grundy(const Graph& g, const GrundyColoring& c) {
    int n = g.vertex_count();
    Verdict verdict;
    if (static_cast<int>(c.colors.size()) != n) {
        verdict.violations.push_back({"uncolored", -1, -1, -1, "coloring size mismatch"});
        return verdict;
    }
    for (int v = 0; v < n; ++v) {
        if (c.colors[v] < 1 || c.colors[v] > c.max_color) {
            verdict.violations.push_back({c.colors[v] < 1 ? "uncolored" : "out-of-range", v, -1,
                                          c.colors[v],
                                          "vertex " + std::to_string(v) + " has color " +
                                              std::to_string(c.colors[v])});
        }
    }
    if (!verdict.violations.empty()) return verdict;

    std::vector<int> class_size(c.max_color + 1, 0);
    for (int v = 0; v < n; ++v) ++class_size[c.colors[v]];
    for (int col = 1; col <= c.max_color; ++col)
        if (class_size[col] == 0)
            verdict.violations.push_back(
                {"empty-class", -1, -1, col, "class " + std::to_string(col) + " empty"});

    std::vector<char> seen(c.max_color + 2, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) {
            if (w > v && c.colors[w] == c.colors[v])
                verdict.violations.push_back({"improper-edge", v, w, c.colors[v],
                                              "edge (" + std::to_string(v) + "," +
                                                  std::to_string(w) + ") inside class " +
                                                  std::to_string(c.colors[v])});
            seen[c.colors[w]] = 1;
        }
        for (int col = 1; col < c.colors[v]; ++col)
            if (!seen[col])
                verdict.violations.push_back({"missing-color", v, -1, col,
                                              "vertex " + std::to_string(v) + " (color " +
                                                  std::to_string(c.colors[v]) +
                                                  ") has no neighbor colored " +
                                                  std::to_string(col)});
        for (int w : g.neighbors(v)) seen[c.colors[w]] = 0;
    }
    verdict.valid = verdict.violations.empty();
    return verdict;
}

bool verify_targets(const Graph& g, const GrundyColoring& c, const TargetSpec& spec) {
    if (!verify_grundy(g, c).valid)
        throw std::invalid_argument("verify_targets: underlying coloring invalid");
    if (spec.target < 1) throw std::invalid_argument("verify_targets: target < 1");
    for (int v : spec.vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("verify_targets: target vertex out of range");
        if (c.colors[v] != spec.target) return false;
    }
    return true;
}

int gamma_orderings(const Graph& g) {
    int n = g.vertex_count();
    if (n > 9) throw budget_exceeded("gamma_orderings: n > 9");
    if (n == 0) return 0;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    int best = 0;
    do {
        best = std::max(best, first_fit(g, order).max_color);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

namespace {

struct ExactSolver {
    std::vector<uint64_t> adj;
    std::unordered_map<uint64_t, int> memo;

    bool independent(uint64_t s) const {
        uint64_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & s) return false;
        }
        return true;
    }

    bool dominates(uint64_t s, uint64_t others) const {
        uint64_t rest = others;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (!(adj[v] & s)) return false;
        }
        return true;
    }

    int solve(uint64_t mask) {
        if (!mask) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int best = 0;
        // all non-empty independent subsets s of mask dominating mask \ s
        for (uint64_t s = mask; s; s = (s - 1) & mask) {
            if (!independent(s)) continue;
            if (!dominates(s, mask & ~s)) continue;
            best = std::max(best, 1 + solve(mask & ~s));
        }
        memo.emplace(mask, best);
        return best;
    }
};

ExactSolver make_exact_solver(const Graph& g) {
    if (g.vertex_count() > 18) throw budget_exceeded("gamma_exact: n > 18");
    ExactSolver s;
    s.adj = g.adjacency_masks();
    return s;
}

} // namespace

int gamma_exact(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    ExactSolver s = make_exact_solver(g);
    return s.solve((uint64_t{1} << g.vertex_count()) - 1);
}

GrundyColoring gamma_exact_witness(const Graph& g) {
    GrundyColoring out;
    out.colors.assign(g.vertex_count(), 0);
    if (g.vertex_count() == 0) return out;
    ExactSolver s = make_exact_solver(g);
    uint64_t mask = (uint64_t{1} << g.vertex_count()) - 1;
    int total = s.solve(mask);
    out.max_color = total;
    int color = 1;
    while (mask) {
        int rest_target = total - color;
        // first class achieving the optimum, in submask enumeration order
        for (uint64_t cls = mask;; cls = (cls - 1) & mask) {
            if (cls && s.independent(cls) && s.dominates(cls, mask & ~cls) &&
                s.solve(mask & ~cls) == rest_target) {
                uint64_t rest = cls;
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    out.colors[v] = color;
                }
                mask &= ~cls;
                break;
            }
            if (!cls) throw std::logic_error("gamma_exact_witness: reconstruction failed");
        }
        ++color;
    }
    return out;
}

int first_fit_search(const Graph& g, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("first_fit_search: trials < 1");
    int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> order(n);
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        for (int v = 0; v < n; ++v) order[v] = v;
        std::mt19937_64 rng(seed ^ (static_cast<uint64_t>(t) * 0x9e3779b97f4a7c15ULL));
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
            std::swap(order[i], order[j]);
        }
        best = std::max(best, first_fit(g, order).max_color);
    }
    return best;
}

std::string coloring_to_json(const GrundyColoring& c) {
    nlohmann::ordered_json j;
    for (std::size_t v = 0; v < c.colors.size(); ++v) j[std::to_string(v)] = c.colors[v];
    return j.dump();
}

GrundyColoring coloring_from_json(const std::string& text, int n) {
    nlohmann::json j = nlohmann::json::parse(text);
    GrundyColoring c;
    c.colors.assign(n, 0);
    for (auto& [key, val] : j.items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= n) throw std::invalid_argument("coloring json: vertex out of range");
        c.colors[v] = val.get<int>();
        c.max_color = std::max(c.max_color, c.colors[v]);
    }
    return c;
}

std::string verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["valid"] = v.valid;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& viol : v.violations) {
        nlohmann::ordered_json rec;
        rec["kind"] = viol.kind;
        if (viol.vertex_a >= 0) rec["vertex"] = viol.vertex_a;
        if (viol.vertex_b >= 0) rec["other"] = viol.vertex_b;
        if (viol.color >= 0) rec["color"] = viol.color;
        rec["message"] = viol.message;
        arr.push_back(rec);
    }
    j["violations"] = arr;
    return j.dump(2);
}

std::string targets_to_json(const TargetSpec& spec) {
    nlohmann::ordered_json j;
    j["target"] = spec.target;
    j["vertices"] = spec.vertices;
    return j.dump();
}

TargetSpec targets_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TargetSpec spec;
    spec.target = j.at("target").get<int>();
    spec.vertices = j.at("vertices").get<std::vector<int>>();
    return spec;
}

} // namespace grundy
