#include "spreadlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "spreadlab/error.hpp"

namespace spreadlab {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n < 0 ? 0 : n) {
    if (n < 0) throw invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") out of range for n=" + std::to_string(n));
        if (u == v) throw invalid_argument("loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

// --- generators ------------------------------------------------------------------

Graph complete(int n) {
    if (n < 1) throw invalid_argument("complete(n) needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph path(int n) {
    if (n < 1) throw invalid_argument("path(n) needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph star(int n) {
    if (n < 1) throw invalid_argument("star(n) needs n >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw invalid_argument("cycle(n) needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw invalid_argument("complete_bipartite(a,b) needs a,b >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

Graph kite(int n, int clique_order) {
    if (clique_order < 2 || clique_order > n)
        throw invalid_argument("kite(n,w) needs 2 <= w <= n");
    std::vector<Edge> e;
    for (int i = 0; i < clique_order; ++i)
        for (int j = i + 1; j < clique_order; ++j) e.emplace_back(i, j);
    int prev = 0;
    for (int v = clique_order; v < n; ++v) {
        e.emplace_back(prev, v);
        prev = v;
    }
    return Graph(n, e);
}

Graph generate(const FamilyDescriptor& d) {
    switch (d.family) {
        case Family::complete: return complete(d.p1);
        case Family::path: return path(d.p1);
        case Family::star: return star(d.p1);
        case Family::cycle: return cycle(d.p1);
        case Family::complete_bipartite: return complete_bipartite(d.p1, d.p2);
        case Family::kite: return kite(d.p1, d.p2);
    }
    throw invalid_argument("unknown family");
}

namespace {

// Edge lists use the 1-based vertex labels of the drawings.
Graph from_one_based(int n, std::initializer_list<Edge> edges) {
    std::vector<Edge> e;
    for (auto [u, v] : edges) e.emplace_back(u - 1, v - 1);
    return Graph(n, e);
}

const std::map<std::string, Graph, std::less<>>& corpus() {
    static const std::map<std::string, Graph, std::less<>> graphs = {
        {"G1", from_one_based(7, {{7, 3}, {3, 1}, {3, 6}, {1, 4}, {1, 2}, {6, 2}, {2, 5}})},
        {"G2", from_one_based(9, {{3, 4}, {4, 5}, {4, 1}, {2, 3}, {2, 1},
                                  {6, 1}, {6, 5}, {1, 7}, {1, 8}, {1, 9}})},
        {"G3", from_one_based(6, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {3, 6}, {5, 6}})},
        {"G4", from_one_based(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {3, 6}, {3, 7}, {6, 7}})},
        {"K22", from_one_based(4, {{3, 1}, {3, 2}, {4, 1}, {4, 2}})},
        {"P4", from_one_based(4, {{3, 1}, {3, 2}, {4, 1}})},
        {"S4", from_one_based(4, {{2, 1}, {3, 1}, {4, 1}})},
        {"K23", from_one_based(5, {{3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}, {5, 2}})},
        {"H1", from_one_based(5, {{3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}})},
        {"H2", from_one_based(5, {{3, 1}, {3, 2}, {4, 1}, {5, 1}})},
        {"P5", from_one_based(5, {{3, 1}, {4, 1}, {4, 2}, {5, 2}})},
        {"S5", from_one_based(5, {{2, 1}, {3, 1}, {4, 1}, {5, 1}})},
    };
    return graphs;
}

}  // namespace

Graph builtin(std::string_view name) {
    const auto& c = corpus();
    auto it = c.find(name);
    if (it == c.end()) throw invalid_argument("unknown builtin graph '" + std::string(name) + "'");
    return it->second;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, _] : corpus()) out.push_back(k);
        return out;
    }();
    return names;
}

// --- metric quantities ----------------------------------------------------------------

namespace {

// Hop counts from `source`; -1 marks unreachable vertices.
void bfs_row(const Graph& g, int source, std::span<std::int64_t> out, std::vector<int>& queue) {
    std::fill(out.begin(), out.end(), -1);
    queue.clear();
    out[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : g.neighbors(x)) {
            if (out[y] < 0) {
                out[y] = out[x] + 1;
                queue.push_back(y);
            }
        }
    }
}

DistanceData finish(IntMatrix dist) {
    const auto n = dist.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (dist(i, j) < 0) throw connectivity_error(static_cast<int>(i), static_cast<int>(j));
    DistanceData dd;
    dd.trans.assign(n, 0);
    std::int64_t total = 0;
    std::int64_t diam = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dd.trans[i] += dist(i, j);
            diam = std::max(diam, dist(i, j));
        }
        total += dd.trans[i];
    }
    dd.wiener = total / 2;
    dd.diameter = static_cast<int>(diam);
    dd.dist = std::move(dist);
    return dd;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<std::int64_t> row(g.order());
    std::vector<int> queue;
    bfs_row(g, 0, row, queue);
    return std::none_of(row.begin(), row.end(), [](auto d) { return d < 0; });
}

void require_connected(const Graph& g) {
    if (g.order() == 0) return;
    std::vector<std::int64_t> row(g.order());
    std::vector<int> queue;
    bfs_row(g, 0, row, queue);
    for (int v = 0; v < g.order(); ++v)
        if (row[v] < 0) throw connectivity_error(0, v);
}

DistanceData all_pairs_distances_serial(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    IntMatrix dist(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) bfs_row(g, s, dist.row(s), queue);
    return finish(std::move(dist));
}

DistanceData all_pairs_distances(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    IntMatrix dist(n);
#pragma omp parallel
    {
        std::vector<int> queue;
        queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
        for (int s = 0; s < n; ++s) bfs_row(g, s, dist.row(s), queue);
    }
    return finish(std::move(dist));
}

std::variant<Bipartition, OddWalk> bipartition(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    std::vector<int> colour(n, -1), parent(n, -1);
    std::deque<int> queue;
    if (n > 0) {
        colour[0] = 0;
        queue.push_back(0);
    }
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (colour[y] < 0) {
                colour[y] = 1 - colour[x];
                parent[y] = x;
                queue.push_back(y);
            } else if (colour[y] == colour[x]) {
                // Tree paths x -> 0 and y -> 0 have equal parity; closing them
                // through the edge x-y gives an odd closed walk.
                std::vector<int> up_x, up_y;
                for (int v = x; v != -1; v = parent[v]) up_x.push_back(v);
                for (int v = y; v != -1; v = parent[v]) up_y.push_back(v);
                OddWalk w;
                w.walk.assign(up_x.rbegin(), up_x.rend());  // 0 .. x
                w.walk.insert(w.walk.end(), up_y.begin(), up_y.end());  // y .. 0
                return w;
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < n; ++v) (colour[v] == 0 ? b.part_a : b.part_b).push_back(v);
    return b;
}

Rational average_distance_degree(const Graph& g, const DistanceData& dd, int v) {
    if (g.degree(v) < 1) throw domain_error("average distance degree of an isolated vertex");
    std::int64_t sum = 0;
    for (int u : g.neighbors(v)) sum += dd.trans[u];
    return Rational(sum, g.degree(v));
}

}  // namespace spreadlab
