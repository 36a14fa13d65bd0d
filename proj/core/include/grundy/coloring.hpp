#ifndef GRUNDY_COLORING_HPP
#define GRUNDY_COLORING_HPP

#include "grundy/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grundy {

// Coloring with colors in [1, max_color]; a valid Grundy coloring also has
// every color class non-empty and every vertex of color i adjacent, for each
// j < i, to some vertex of color j.
struct GrundyColoring {
    std::vector<int> colors; // colors[v] in [1, max_color]
    int max_color = 0;
};

struct TargetSpec {
    std::vector<int> vertices;
    int target = 1;
};

struct Violation {
    std::string kind; // improper-edge | missing-color | out-of-range | empty-class | uncolored
    int vertex_a = -1;
    int vertex_b = -1;
    int color = -1;
    std::string message;
};

struct Verdict {
    bool valid = false;
    std::vector<Violation> violations;
};

// Greedy coloring along `order` (a permutation of the vertices): each vertex
// takes the least color absent among its already colored neighbors.
GrundyColoring first_fit(const Graph& g, const std::vector<int>& order);

Verdict verify_grundy(const Graph& g, const GrundyColoring& c);

// True iff every target vertex got exactly the target color. The underlying
// coloring must verify, else invalid-argument.
bool verify_targets(const Graph& g, const GrundyColoring& c, const TargetSpec& spec);

// Max first-fit value over all vertex orderings; n <= 9.
int gamma_orderings(const Graph& g);

// Exact Grundy number by the recurrence over induced subgraphs: the first
// color class ranges over every non-empty independent set dominating the
// rest (not only maximal ones), memoized on the surviving-vertex bitmask.
// Hard cap n <= 18.
int gamma_exact(const Graph& g);

// Same recursion, also reconstructs one optimal coloring.
GrundyColoring gamma_exact_witness(const Graph& g);

// Max first-fit value over `trials` seeded random orderings; a lower bound
// on the Grundy number. Orderings come from a Fisher-Yates shuffle driven by
// std::mt19937_64 (trial t uses seed ^ (t * 0x9e3779b97f4a7c15)), so results
// replay exactly across platforms.
int first_fit_search(const Graph& g, int trials, uint64_t seed);

// Serialization: {"0": 1, "1": 2, ...} with 0-based vertex keys.
std::string coloring_to_json(const GrundyColoring& c);
GrundyColoring coloring_from_json(const std::string& text, int n);
std::string verdict_to_json(const Verdict& v);
std::string targets_to_json(const TargetSpec& spec);
TargetSpec targets_from_json(const std::string& text);

} // namespace grundy

#endif
