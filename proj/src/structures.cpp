#include "spreadlab/structures.hpp"

#include <algorithm>
#include <set>

#include "spreadlab/error.hpp"

namespace spreadlab {

namespace {

std::int64_t transmission_sum(const DistanceData& dd, const std::vector<int>& vs) {
    std::int64_t s = 0;
    for (int v : vs) s += dd.trans[v];
    return s;
}

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P u X with the most neighbours in P.
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (int u : *set) {
            std::size_t c = 0;
            for (int v : p) c += g.adjacent(u, v) ? 1 : 0;
            if (pivot < 0 || c > best) pivot = u, best = c;
        }
    }
    std::vector<int> candidates;
    for (int v : p)
        if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> np, nx;
        for (int u : p)
            if (g.adjacent(v, u)) np.push_back(u);
        for (int u : x)
            if (g.adjacent(v, u)) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

WitnessSet maximum_cliques(const Graph& g, const DistanceData& dd) {
    std::vector<std::vector<int>> maximal;
    std::vector<int> r, all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    bron_kerbosch(g, r, all, {}, maximal);

    WitnessSet ws;
    ws.kind = WitnessKind::clique;
    for (const auto& c : maximal) ws.parameter = std::max(ws.parameter, static_cast<int>(c.size()));
    std::set<std::vector<int>> unique;
    for (auto c : maximal) {
        if (static_cast<int>(c.size()) != ws.parameter) continue;
        std::sort(c.begin(), c.end());
        unique.insert(std::move(c));
    }
    for (const auto& c : unique) {
        ws.members.push_back(c);
        ws.s_values.push_back(transmission_sum(dd, c));
    }
    return ws;
}

WitnessSet diameter_paths(const Graph& g, const DistanceData& dd, int cap) {
    if (cap < 1) throw invalid_argument("diameter path cap must be >= 1");
    WitnessSet ws;
    ws.kind = WitnessKind::diameter_path;
    const int d = dd.diameter;
    ws.parameter = d;
    const int n = g.order();
    if (n < 2) return ws;

    std::vector<int> current;
    // Depth-first walk of the shortest-path DAG from u towards v.
    auto extend = [&](auto&& self, int u, int v) -> bool {
        const int x = current.back();
        if (x == v) {
            if (static_cast<int>(ws.members.size()) >= cap) {
                ws.truncated = true;
                return false;
            }
            ws.members.push_back(current);
            ws.s_values.push_back(transmission_sum(dd, current));
            return true;
        }
        const auto k = static_cast<std::int64_t>(current.size());
        for (int y : g.neighbors(x)) {
            if (dd.dist(u, y) == k && dd.dist(y, v) == d - k) {
                current.push_back(y);
                const bool keep_going = self(self, u, v);
                current.pop_back();
                if (!keep_going) return false;
            }
        }
        return true;
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (dd.dist(u, v) != d) continue;
            current.assign(1, u);
            if (!extend(extend, u, v)) return ws;
        }
    }
    return ws;
}

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next_nb(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> blocks;
    int time = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<int> stack{root};
        disc[root] = low[root] = time++;
        while (!stack.empty()) {
            const int x = stack.back();
            const auto& nb = g.neighbors(x);
            if (next_nb[x] < nb.size()) {
                const int y = nb[next_nb[x]++];
                if (disc[y] < 0) {
                    parent[y] = x;
                    disc[y] = low[y] = time++;
                    edge_stack.emplace_back(x, y);
                    stack.push_back(y);
                } else if (y != parent[x] && disc[y] < disc[x]) {
                    edge_stack.emplace_back(x, y);
                    low[x] = std::min(low[x], disc[y]);
                }
                continue;
            }
            stack.pop_back();
            const int p = parent[x];
            if (p < 0) continue;
            low[p] = std::min(low[p], low[x]);
            if (low[x] >= disc[p]) {
                std::vector<Edge> block;
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
                    if (e == Edge{p, x}) break;
                }
                std::sort(block.begin(), block.end());
                blocks.push_back(std::move(block));
            }
        }
    }
    return blocks;
}

namespace {

std::vector<int> block_vertices(const std::vector<Edge>& block) {
    std::vector<int> vs;
    for (auto [u, v] : block) vs.insert(vs.end(), {u, v});
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// Cycle order starting at the smallest vertex, stepping to its smaller neighbour.
std::vector<int> cycle_order(const std::vector<Edge>& block) {
    const auto vs = block_vertices(block);
    auto nbrs = [&](int v) {
        std::vector<int> out;
        for (auto [a, b] : block) {
            if (a == v) out.push_back(b);
            if (b == v) out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<int> order{vs.front()};
    int prev = vs.front();
    int cur = nbrs(prev).front();
    while (cur != vs.front()) {
        order.push_back(cur);
        const auto nb = nbrs(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

}  // namespace

bool is_cactus(const Graph& g) {
    if (!is_connected(g)) return false;
    for (const auto& b : biconnected_blocks(g))
        if (b.size() > 1 && b.size() != block_vertices(b).size()) return false;
    return true;
}

WitnessSet cactus_longest_cycles(const Graph& g, const DistanceData& dd) {
    require_connected(g);
    WitnessSet ws;
    ws.kind = WitnessKind::cycle;
    std::vector<std::vector<Edge>> cycles;
    for (auto& b : biconnected_blocks(g)) {
        if (b.size() == 1) continue;
        const auto nv = block_vertices(b).size();
        if (b.size() != nv)
            throw not_cactus_error("not a cactus: a block has " + std::to_string(nv) + " vertices and " +
                                   std::to_string(b.size()) + " edges");
        cycles.push_back(std::move(b));
    }
    if (cycles.empty()) throw acyclic_error("graph is a tree: circumference undefined");
    for (const auto& c : cycles) ws.parameter = std::max(ws.parameter, static_cast<int>(c.size()));
    for (const auto& c : cycles) {
        if (static_cast<int>(c.size()) != ws.parameter) continue;
        ws.members.push_back(cycle_order(c));
    }
    std::sort(ws.members.begin(), ws.members.end());
    for (const auto& m : ws.members) ws.s_values.push_back(transmission_sum(dd, m));
    return ws;
}

std::int64_t cycle_internal_sum(int l) {
    if (l < 3) throw invalid_argument("cycle length must be >= 3");
    const std::int64_t ll = l;
    return ll % 2 == 0 ? ll * ll / 4 : (ll * ll - 1) / 4;
}

std::int64_t path_internal_sum(int d) {
    if (d < 1) throw invalid_argument("path length must be >= 1");
    const std::int64_t dd = d;
    return dd * (dd + 1) * (dd + 2) / 3;
}

}  // namespace spreadlab
