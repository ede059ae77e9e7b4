#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/graph.hpp"

namespace spreadlab {

// Canonical form for graphs with at most kMaxCanonicalOrder vertices: the
// largest upper-triangle bit string (graph6 bit order) over all labelings
// reachable by individualization-refinement. Equal keys <=> isomorphic.
inline constexpr int kMaxCanonicalOrder = 11;

using CanonicalKey = std::uint64_t;

CanonicalKey canonical_key(const Graph& g);
// Graph on n vertices whose labeling realizes `key`.
Graph graph_from_key(int n, CanonicalKey key);
bool isomorphic(const Graph& a, const Graph& b);

inline constexpr int kMinSearchOrder = 2;
inline constexpr int kMaxSearchOrder = 10;

// One representative per isomorphism class of connected bipartite graphs on n
// vertices, in canonical-key order. Sub-graphs of K_{a,n-a} are scanned for
// every 1 <= a <= n/2; cost grows like 2^(floor(n/2) * ceil(n/2)).
std::vector<Graph> enumerate_connected_bipartite(int n);
std::vector<Graph> enumerate_connected_bipartite_serial(int n);

// S_Q(K_{a,n-a}) for a = 1 .. floor(n/2).
std::vector<double> check_monotonicity(int n);

struct GraphClass {
    CanonicalKey key = 0;
    std::string graph6;
    double sq = 0.0;
};

struct ConjectureOptions {
    std::uint64_t chunk_size = 1u << 14;  // edge subsets per work unit
    std::optional<std::string> checkpoint_path;
    // Stop after this many newly processed chunks (the report is then partial).
    std::optional<std::uint64_t> max_new_chunks;
};

struct ConjectureReport {
    int n = 0;
    bool complete = true;
    std::uint64_t labeled_examined = 0;  // connected labeled subgraphs passing symmetry pruning
    std::uint64_t graphs_checked = 0;    // isomorphism classes evaluated
    GraphClass minimizer;
    bool minimizer_is_balanced_kab = false;
    double reference = 0.0;              // S_Q(K_{floor(n/2), ceil(n/2)})
    bool holds = false;
    std::vector<GraphClass> counterexamples;
    std::vector<GraphClass> classes;     // every class, canonical-key order
    double seconds = 0.0;
    int threads = 1;
    std::uint64_t chunks_total = 0;
    std::uint64_t chunks_resumed = 0;
};

inline constexpr double kConjectureTolerance = 1e-6;

ConjectureReport check_conjecture(int n, const ConjectureOptions& opts = {});
// Single-threaded reference without chunking or checkpoints.
ConjectureReport check_conjecture_serial(int n);

}  // namespace spreadlab
