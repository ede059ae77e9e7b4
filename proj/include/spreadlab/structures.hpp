#pragma once

#include <cstdint>
#include <vector>

#include "spreadlab/graph.hpp"

namespace spreadlab {

enum class WitnessKind { clique, diameter_path, cycle };

// Substructures indexing the clique, diameter and cactus bounds.
struct WitnessSet {
    WitnessKind kind = WitnessKind::clique;
    int parameter = 0;                      // omega, d or l
    std::vector<std::vector<int>> members;  // cliques sorted; paths/cycles in traversal order
    std::vector<std::int64_t> s_values;     // sum of member transmissions
    bool truncated = false;                 // diameter paths only
};

// All cliques of maximum order (Bron-Kerbosch with pivoting), sorted and unique.
WitnessSet maximum_cliques(const Graph& g, const DistanceData& dd);

inline constexpr int kDefaultPathCap = 10000;

// Geodesics of length diam(G), each undirected path once with the smaller
// endpoint first. Stops after `cap` paths and sets `truncated`.
WitnessSet diameter_paths(const Graph& g, const DistanceData& dd, int cap = kDefaultPathCap);

// True iff every biconnected block is a single edge or a cycle.
bool is_cactus(const Graph& g);

// Longest cycles of a cactus, each listed from its smallest vertex.
// Throws not_cactus_error or acyclic_error.
WitnessSet cactus_longest_cycles(const Graph& g, const DistanceData& dd);

// Sum of the distances, measured along C_l, from one cycle vertex to the others.
std::int64_t cycle_internal_sum(int l);
// Sum of d(u,v) over ordered pairs of a path with d edges: d(d+1)(d+2)/3.
std::int64_t path_internal_sum(int d);

// Biconnected blocks as edge lists (Hopcroft-Tarjan, iterative).
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g);

}  // namespace spreadlab
