#include "grundy/solver_dp.hpp"

#include "grundy/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace grundy {

namespace {

struct Back {
    int32_t x = -1; // child state (left child for joins)
    int32_t y = -1; // right child state for joins, assigned color for introduces
};

// Flat state table for one decomposition node. A state is the bag coloring,
// one witness bitmask per bag vertex (bit c-1 = a processed neighbor with
// color c exists, only colors below the vertex's own color are recorded) and
// the top-color flag.
class StateTable {
public:
    explicit StateTable(int bag_size) : b_(bag_size) {}

    int size() const { return count_; }
    int bag_size() const { return b_; }

    const uint8_t* colors(int idx) const { return colors_.data() + static_cast<std::size_t>(idx) * b_; }
    const uint64_t* wits(int idx) const { return wits_.data() + static_cast<std::size_t>(idx) * b_; }
    bool top(int idx) const { return tops_[idx] != 0; }
    const Back& back(int idx) const { return backs_[idx]; }

    // dedup insert; identical states keep their first backref
    int add(const uint8_t* cols, const uint64_t* witmasks, bool top, Back back) {
        // witness sets stay strictly below the vertex's own color
        for (int i = 0; i < b_; ++i)
            assert((witmasks[i] & ~((uint64_t{1} << (cols[i] - 1)) - 1)) == 0);
        uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](uint64_t x) {
            h ^= x;
            h *= 0x100000001b3ULL;
        };
        for (int i = 0; i < b_; ++i) mix(cols[i]);
        for (int i = 0; i < b_; ++i) mix(witmasks[i]);
        mix(top ? 1 : 0);
        auto [it, fresh] = index_.try_emplace(h, -1);
        for (int idx = it->second; idx != -1; idx = chain_[idx]) {
            if (tops_[idx] == (top ? 1 : 0) &&
                (b_ == 0 || (std::memcmp(colors(idx), cols, b_) == 0 &&
                             std::memcmp(wits(idx), witmasks, b_ * sizeof(uint64_t)) == 0)))
                return idx;
        }
        if (b_ > 0) {
            colors_.insert(colors_.end(), cols, cols + b_);
            wits_.insert(wits_.end(), witmasks, witmasks + b_);
        }
        tops_.push_back(top ? 1 : 0);
        backs_.push_back(back);
        chain_.push_back(it->second);
        it->second = count_;
        return count_++;
    }

private:
    int b_;
    int count_ = 0;
    std::vector<uint8_t> colors_;
    std::vector<uint64_t> wits_;
    std::vector<uint8_t> tops_;
    std::vector<Back> backs_;
    std::unordered_map<uint64_t, int> index_;
    std::vector<int> chain_;
};

std::vector<int> post_order(const std::vector<NiceNode>& nodes) {
    std::vector<int> order;
    order.reserve(nodes.size());
    std::vector<std::pair<int, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto& [x, phase] = stack.back();
        if (phase < static_cast<int>(nodes[x].children.size())) {
            int child = nodes[x].children[phase];
            ++phase;
            stack.emplace_back(child, 0);
        } else {
            order.push_back(x);
            stack.pop_back();
        }
    }
    return order;
}

} // namespace

std::pair<bool, std::optional<GrundyColoring>>
grundy_decision_dp(const Graph& g, const TreeDecomposition& nice, int k, const DpOptions& opts) {
    if (k < 1) throw std::invalid_argument("grundy_decision_dp: k < 1");
    if (k > 64) throw budget_exceeded("grundy_decision_dp: k > 64 unsupported");
    auto verdict = verify_decomposition(g, nice);
    if (!verdict.valid)
        throw std::invalid_argument("grundy_decision_dp: invalid decomposition: " +
                                    (verdict.violations.empty() ? std::string("?")
                                                                : verdict.violations.front()));
    auto nodes = classify_nice(nice);
    auto order = post_order(nodes);
    int nn = static_cast<int>(nodes.size());

    std::vector<StateTable> tables;
    tables.reserve(nn);
    for (int x = 0; x < nn; ++x) tables.emplace_back(static_cast<int>(nice.bags[x].size()));

    uint64_t states_created = 0;
    auto charge = [&](int created) {
        states_created += created;
        if (states_created > opts.state_budget)
            throw budget_exceeded("grundy_decision_dp: state budget exceeded");
    };

    std::vector<uint8_t> scratch_cols;
    std::vector<uint64_t> scratch_wits;

    for (int x : order) {
        const NiceNode& node = nodes[x];
        const auto& bag = nice.bags[x];
        StateTable& table = tables[x];
        switch (node.kind) {
        case NiceKind::Leaf: {
            table.add(nullptr, nullptr, false, Back{});
            charge(1);
            break;
        }
        case NiceKind::Introduce: {
            int child = node.children[0];
            const StateTable& ct = tables[child];
            int b = static_cast<int>(bag.size());
            int v = node.vertex;
            int vpos = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
            // bag positions adjacent to v
            std::vector<int> nbr_pos;
            for (int i = 0; i < b; ++i)
                if (i != vpos && g.has_edge(v, bag[i])) nbr_pos.push_back(i);
            scratch_cols.assign(b, 0);
            scratch_wits.assign(b, 0);
            for (int s = 0; s < ct.size(); ++s) {
                const uint8_t* ccols = ct.colors(s);
                const uint64_t* cwits = ct.wits(s);
                for (int i = 0, j = 0; i < b; ++i) {
                    if (i == vpos) continue;
                    scratch_cols[i] = ccols[j];
                    scratch_wits[i] = cwits[j];
                    ++j;
                }
                for (int c = 1; c <= k; ++c) {
                    bool proper = true;
                    uint64_t vwit = 0;
                    for (int i : nbr_pos) {
                        int uc = scratch_cols[i];
                        if (uc == c) {
                            proper = false;
                            break;
                        }
                        if (uc < c) vwit |= uint64_t{1} << (uc - 1);
                    }
                    if (!proper) continue;
                    scratch_cols[vpos] = static_cast<uint8_t>(c);
                    scratch_wits[vpos] = vwit;
                    // neighbors with higher colors now see c
                    for (int i : nbr_pos)
                        if (c < scratch_cols[i]) scratch_wits[i] |= uint64_t{1} << (c - 1);
                    int before = table.size();
                    table.add(scratch_cols.data(), scratch_wits.data(),
                              ct.top(s) || c == k, Back{s, c});
                    charge(table.size() - before);
                    // undo neighbor updates for the next color
                    for (int i = 0, j = 0; i < b; ++i) {
                        if (i == vpos) continue;
                        scratch_wits[i] = cwits[j];
                        ++j;
                    }
                }
            }
            break;
        }
        case NiceKind::Forget: {
            int child = node.children[0];
            const auto& cbag = nice.bags[child];
            const StateTable& ct = tables[child];
            int cb = static_cast<int>(cbag.size());
            int v = node.vertex;
            int vpos =
                static_cast<int>(std::lower_bound(cbag.begin(), cbag.end(), v) - cbag.begin());
            scratch_cols.assign(bag.size(), 0);
            scratch_wits.assign(bag.size(), 0);
            for (int s = 0; s < ct.size(); ++s) {
                const uint8_t* ccols = ct.colors(s);
                const uint64_t* cwits = ct.wits(s);
                int col = ccols[vpos];
                uint64_t need = (uint64_t{1} << (col - 1)) - 1;
                if (cwits[vpos] != need) continue; // v lacks a witness below its color
                for (int i = 0, j = 0; i < cb; ++i) {
                    if (i == vpos) continue;
                    scratch_cols[j] = ccols[i];
                    scratch_wits[j] = cwits[i];
                    ++j;
                }
                int before = table.size();
                table.add(scratch_cols.data(), scratch_wits.data(), ct.top(s), Back{s, -1});
                charge(table.size() - before);
            }
            break;
        }
        case NiceKind::Join: {
            int lc = node.children[0];
            int rc = node.children[1];
            const StateTable& lt = tables[lc];
            const StateTable& rt = tables[rc];
            int b = static_cast<int>(bag.size());
            // group right states by bag coloring
            std::unordered_map<uint64_t, std::vector<int>> by_coloring;
            auto color_hash = [&](const uint8_t* cols) {
                uint64_t h = 0xcbf29ce484222325ULL;
                for (int i = 0; i < b; ++i) {
                    h ^= cols[i];
                    h *= 0x100000001b3ULL;
                }
                return h;
            };
            for (int s = 0; s < rt.size(); ++s) by_coloring[color_hash(rt.colors(s))].push_back(s);
            scratch_cols.assign(b, 0);
            scratch_wits.assign(b, 0);
            for (int s = 0; s < lt.size(); ++s) {
                auto it = by_coloring.find(color_hash(lt.colors(s)));
                if (it == by_coloring.end()) continue;
                for (int r : it->second) {
                    if (std::memcmp(lt.colors(s), rt.colors(r), b) != 0) continue;
                    std::memcpy(scratch_cols.data(), lt.colors(s), b);
                    for (int i = 0; i < b; ++i) scratch_wits[i] = lt.wits(s)[i] | rt.wits(r)[i];
                    int before = table.size();
                    table.add(scratch_cols.data(), scratch_wits.data(), lt.top(s) || rt.top(r),
                              Back{s, r});
                    charge(table.size() - before);
                }
            }
            break;
        }
        }
    }

    // accept at the empty root iff the top color was used
    const StateTable& root = tables[0];
    int accept = -1;
    for (int s = 0; s < root.size(); ++s)
        if (root.top(s)) {
            accept = s;
            break;
        }
    if (accept == -1) return {false, std::nullopt};

    // witness reconstruction
    GrundyColoring witness;
    witness.colors.assign(g.vertex_count(), 0);
    witness.max_color = k;
    std::vector<std::pair<int, int>> stack{{0, accept}};
    while (!stack.empty()) {
        auto [x, s] = stack.back();
        stack.pop_back();
        const NiceNode& node = nodes[x];
        const Back& bk = tables[x].back(s);
        switch (node.kind) {
        case NiceKind::Leaf:
            break;
        case NiceKind::Introduce: {
            int v = node.vertex;
            assert(witness.colors[v] == 0 || witness.colors[v] == bk.y);
            witness.colors[v] = bk.y;
            stack.emplace_back(node.children[0], bk.x);
            break;
        }
        case NiceKind::Forget:
            stack.emplace_back(node.children[0], bk.x);
            break;
        case NiceKind::Join:
            stack.emplace_back(node.children[0], bk.x);
            stack.emplace_back(node.children[1], bk.y);
            break;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (witness.colors[v] == 0) throw std::logic_error("dp witness: vertex left uncolored");
    return {true, witness};
}

int gamma_scan_cap(const Graph& g) {
    return std::min(g.max_degree() + 1, g.vertex_count());
}

int gamma_pw_cap(const Graph& g, int pw_width) {
    return std::min(gamma_scan_cap(g), 8 * (pw_width + 1));
}

namespace {

int gamma_scan(const Graph& g, const TreeDecomposition& nice, int cap, const DpOptions& opts) {
    if (g.vertex_count() == 0) return 0;
    if (cap > 64) throw budget_exceeded("gamma scan: color range beyond 64");
    if (opts.heuristic_log_cap) {
        int heur = (nice.width() + 1) *
                   static_cast<int>(std::ceil(std::log2(g.vertex_count() + 1.0)));
        cap = std::min(cap, std::max(1, heur));
    }
    int last_decided = -1;
    try {
        for (int k = cap; k >= 1; --k) {
            auto [ok, witness] = grundy_decision_dp(g, nice, k, opts);
            last_decided = k;
            if (ok) return k;
        }
    } catch (budget_exceeded& e) {
        throw budget_exceeded(std::string(e.what()) + " (largest k decided: " +
                                  std::to_string(last_decided) + ")",
                              last_decided);
    }
    throw std::logic_error("gamma scan: no feasible k found");
}

} // namespace

int gamma_tw(const Graph& g, const TreeDecomposition& d, const DpOptions& opts) {
    if (g.vertex_count() == 0) return 0;
    auto verdict = verify_decomposition(g, d);
    if (!verdict.valid) throw std::invalid_argument("gamma_tw: invalid decomposition");
    TreeDecomposition nice = to_nice(d);
    return gamma_scan(g, nice, gamma_scan_cap(g), opts);
}

int gamma_pw(const Graph& g, const PathDecomposition& d, const DpOptions& opts) {
    if (g.vertex_count() == 0) return 0;
    auto verdict = verify_decomposition(g, d);
    if (!verdict.valid) throw std::invalid_argument("gamma_pw: invalid decomposition");
    TreeDecomposition nice = to_nice(to_tree(d));
    return gamma_scan(g, nice, gamma_pw_cap(g, d.width()), opts);
}

} // namespace grundy
