#ifndef GRUNDY_SOLVER_MODULAR_HPP
#define GRUNDY_SOLVER_MODULAR_HPP

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace grundy {

// Partition of the vertices into maximal twin classes. Within a class all
// vertices are pairwise adjacent (true twins) or pairwise non-adjacent
// (false twins); between two classes the bipartite connection is complete or
// empty, recorded in the quotient adjacency.
struct TwinPartition {
    enum class Kind { TrueTwin, FalseTwin, Singleton };
    std::vector<std::vector<int>> classes; // partition of 0..n-1
    std::vector<Kind> kinds;
    std::vector<std::vector<int>> quotient; // per class, sorted adjacent class indices

    int count() const { return static_cast<int>(classes.size()); }
    bool quotient_adjacent(int a, int b) const;
};

TwinPartition compute_twin_classes(const Graph& g);

// Shrinks every false-twin class to its lowest-id vertex; the Grundy number
// is preserved. representative_of (optional) maps old vertex -> new id of
// the vertex it is represented by.
Graph reduce_false_twins(const Graph& g, const TwinPartition& p,
                         std::vector<int>* representative_of = nullptr);

// All non-empty class-index sets that are pairwise non-adjacent in the
// quotient (independent sets), as bitmasks; requires every class to be a
// clique or singleton. Aborts with budget-exceeded when more than `limit`
// patterns exist (limit < 0 = unlimited, caller beware).
std::vector<uint64_t> enumerate_patterns(const TwinPartition& p, long long limit = -1);

// An ordering of the patterns such that every later pattern is, classwise,
// matched by every earlier one (equal index or quotient-adjacent classes);
// nullopt if none exists. Subset DP: a pattern may be placed last iff it is
// compatible with every other member.
std::optional<std::vector<uint64_t>> is_eligible(const std::vector<uint64_t>& patterns,
                                                 const TwinPartition& p);

// maximize sum x_I subject to sum_{I contains i} x_I = class_sizes[i];
// x_I >= 1 by default (>= 0 with allow_zero).
struct PatternProgram {
    std::vector<uint64_t> patterns;
    std::vector<int> class_sizes;
};

struct PatternSolution {
    long long objective = 0;
    std::vector<int> x;
};

std::optional<PatternSolution> solve_pattern_program(const PatternProgram& prog,
                                                     bool allow_zero = false);

struct NdResult {
    int gamma = 0;
    GrundyColoring coloring;
};

// Grundy number by the twin-class pattern program: reduce false twins,
// enumerate patterns (budget 64), maximize the program over eligible
// subcollections, and assemble a witness coloring mapped back to the input
// graph. relaxed_ilp switches to x >= 0 over maximal eligible collections
// only (same optimum, fewer programs).
NdResult gamma_nd(const Graph& g, bool relaxed_ilp = false);

// Top-level partition into at most w maximal modules: connected components,
// co-components, or (both connected) maximal proper strong modules found by
// closing vertex pairs under splitters. Requires n >= 2.
std::vector<std::vector<int>> modular_partition(const Graph& g);

// Grundy number by the modular-width recursion: recursively solve each
// module that is neither a clique nor independent, replace it by a clique of
// that size with the same external adjacency, then run gamma_nd.
int gamma_mw(const Graph& g);

} // namespace grundy

#endif
