#ifndef GRUNDY_GENERATORS_HPP
#define GRUNDY_GENERATORS_HPP

#include "grundy/graph.hpp"

#include <cstdint>
#include <vector>

namespace grundy {

// Deterministic seeded families used by the CLI, the tests and the
// acceptance suite. All randomness comes from std::mt19937_64 so outputs
// replay bit-exactly.

// G(n, p) with edge probability percent/100.
Graph random_graph(int n, int percent, uint64_t seed);

// spine path plus 0..max_legs pendant legs per spine vertex
Graph caterpillar(int spine, int max_legs, uint64_t seed);

// random cotree with 2..max_branch children per internal node
Graph random_cograph(int n, int max_branch, uint64_t seed);

// blow-up of a random quotient on `classes` twin classes, each a clique or
// an independent set of size 1..max_class_size
Graph random_bounded_nd(int classes, int max_class_size, uint64_t seed);

// random outer graph with one vertex blown up into a random module of the
// given size; returns the graph and the module's vertex list
struct PlantedModule {
    Graph graph;
    std::vector<int> module;
};
PlantedModule random_planted_module(int outer, int module_size, uint64_t seed);

// deterministic Fisher-Yates permutation of 0..n-1
std::vector<int> random_permutation(int n, uint64_t seed);

} // namespace grundy

#endif
