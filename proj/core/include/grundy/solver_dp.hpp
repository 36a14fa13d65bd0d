#ifndef GRUNDY_SOLVER_DP_HPP
#define GRUNDY_SOLVER_DP_HPP

#include "grundy/coloring.hpp"
#include "grundy/decomposition.hpp"
#include "grundy/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace grundy {

struct DpOptions {
    // total states created across one decision call before aborting
    uint64_t state_budget = 30'000'000;
    // opt-in heuristic scan cap (tw+1)*ceil(log2(n+1)); NOT sound in general,
    // provided for experimentation only
    bool heuristic_log_cap = false;
};

// Decides whether g has a Grundy coloring with max color exactly k, by
// dynamic programming over the given nice tree decomposition. States track
// the bag coloring, per bag vertex the set of colors already seen among
// processed neighbors, and whether color k has been used. Forgetting a
// vertex requires its witness set to equal [1, color-1]; the empty root
// accepts iff the top color was used. On acceptance a witness coloring is
// reconstructed.
std::pair<bool, std::optional<GrundyColoring>>
grundy_decision_dp(const Graph& g, const TreeDecomposition& nice, int k,
                   const DpOptions& opts = {});

// Grundy number via the decision DP, scanning k downward from
// min(maxdeg+1, n) (no monotonicity assumed). The decomposition need not be
// nice; it is converted internally.
int gamma_tw(const Graph& g, const TreeDecomposition& d, const DpOptions& opts = {});

// Same with the additional scan cap 8*(width+1) valid for path
// decompositions.
int gamma_pw(const Graph& g, const PathDecomposition& d, const DpOptions& opts = {});

// The scan caps, exposed for logging.
int gamma_scan_cap(const Graph& g);
int gamma_pw_cap(const Graph& g, int pw_width);

} // namespace grundy

#endif
