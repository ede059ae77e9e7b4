#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "spreadlab/matrix.hpp"

namespace spreadlab {

using Rational = boost::rational<std::int64_t>;
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    // Loops are rejected; duplicate edges and either endpoint order are accepted.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    // Sorted, each edge stored with first < second.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    // Sorted neighbour list.
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const noexcept;
    bool adjacent(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct DistanceData {
    IntMatrix dist;
    std::vector<std::int64_t> trans;  // transmission of each vertex
    std::int64_t wiener = 0;
    int diameter = 0;
};

// --- I/O ---------------------------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// --- generators ----------------------------------------------------------------

enum class Family { complete, path, star, cycle, complete_bipartite, kite };

struct FamilyDescriptor {
    Family family;
    int p1 = 0;
    int p2 = 0;
};

// Accepts "complete:5", "path:4", "star:5", "cycle:6",
// "complete_bipartite:2,3" (alias "kab:2,3") and "kite:5,3".
FamilyDescriptor parse_family(std::string_view text);
std::string to_string(const FamilyDescriptor& d);

// Labelings: path 0-1-..-(n-1); star centre 0; cycle 0-1-..-(n-1)-0;
// K_{a,b} parts {0..a-1} and {a..a+b-1}; kite clique on 0..w-1 with the path
// w, w+1, ... hanging from vertex 0.
Graph generate(const FamilyDescriptor& d);
Graph complete(int n);
Graph path(int n);
Graph star(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
Graph kite(int n, int clique_order);

// Graphs drawn in the source figures: G1..G4, H1, H2, K22, P4, S4, K23, P5, S5.
Graph builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

// --- metric quantities -----------------------------------------------------------

bool is_connected(const Graph& g);
// Throws connectivity_error on disconnected input.
void require_connected(const Graph& g);

DistanceData all_pairs_distances(const Graph& g);
// Serial reference kernel for all_pairs_distances.
DistanceData all_pairs_distances_serial(const Graph& g);

struct Bipartition {
    std::vector<int> part_a;  // contains vertex 0
    std::vector<int> part_b;
};

// Closed walk v0, v1, ..., v0 of odd length along edges of the graph.
struct OddWalk {
    std::vector<int> walk;
};

std::variant<Bipartition, OddWalk> bipartition(const Graph& g);

// t_v = (sum of neighbour transmissions) / deg(v), kept exact.
Rational average_distance_degree(const Graph& g, const DistanceData& dd, int v);

}  // namespace spreadlab
