#include <algorithm>
#include <array>

#include "spreadlab/error.hpp"
#include "spreadlab/search.hpp"

namespace spreadlab {

namespace {

using Colouring = std::array<std::uint8_t, kMaxCanonicalOrder>;

struct CanonState {
    int n;
    std::array<std::uint32_t, kMaxCanonicalOrder> adj{};
    CanonicalKey best = 0;
    bool have_best = false;
};

// Recolours by (colour, neighbour colour counts) until stable. Colours are
// ranks of sorted signatures, so cell order is preserved and the result is
// independent of vertex labels.
int refine(const CanonState& st, Colouring& col) {
    const int n = st.n;
    {
        // Compress to 0..cells-1 keeping order.
        std::array<bool, 2 * kMaxCanonicalOrder + 2> used{};
        for (int v = 0; v < n; ++v) used[col[v]] = true;
        std::array<std::uint8_t, 2 * kMaxCanonicalOrder + 2> rank{};
        std::uint8_t r = 0;
        for (std::size_t c = 0; c < used.size(); ++c)
            if (used[c]) rank[c] = r++;
        for (int v = 0; v < n; ++v) col[v] = rank[col[v]];
    }
    int cells = 1 + *std::max_element(col.begin(), col.begin() + n);
    using Sig = std::array<std::uint8_t, kMaxCanonicalOrder + 1>;
    std::array<Sig, kMaxCanonicalOrder> sig{};
    std::array<int, kMaxCanonicalOrder> idx{};
    while (true) {
        for (int v = 0; v < n; ++v) {
            sig[v].fill(0);
            sig[v][0] = col[v];
            for (std::uint32_t m = st.adj[v]; m; m &= m - 1) ++sig[v][1 + col[__builtin_ctz(m)]];
        }
        for (int v = 0; v < n; ++v) idx[v] = v;
        std::sort(idx.begin(), idx.begin() + n, [&](int x, int y) { return sig[x] < sig[y]; });
        Colouring next{};
        int c = 0;
        for (int k = 0; k < n; ++k) {
            if (k > 0 && sig[idx[k]] != sig[idx[k - 1]]) ++c;
            next[idx[k]] = static_cast<std::uint8_t>(c);
        }
        col = next;
        if (c + 1 == cells) return cells;
        cells = c + 1;
    }
}

CanonicalKey key_of(const CanonState& st, const Colouring& pos) {
    // pos[v] is the new label of v.
    std::array<int, kMaxCanonicalOrder> at{};
    for (int v = 0; v < st.n; ++v) at[pos[v]] = v;
    CanonicalKey key = 0;
    for (int j = 1; j < st.n; ++j)
        for (int i = 0; i < j; ++i) key = (key << 1) | ((st.adj[at[i]] >> at[j]) & 1u);
    return key;
}

void search(CanonState& st, Colouring col) {
    const int cells = refine(st, col);
    if (cells == st.n) {
        const CanonicalKey k = key_of(st, col);
        if (!st.have_best || k > st.best) st.best = k, st.have_best = true;
        return;
    }
    // First non-singleton cell.
    std::array<int, kMaxCanonicalOrder> count{};
    for (int v = 0; v < st.n; ++v) ++count[col[v]];
    int target = 0;
    while (count[target] < 2) ++target;
    for (int v = 0; v < st.n; ++v) {
        if (col[v] != target) continue;
        Colouring child{};
        for (int u = 0; u < st.n; ++u)
            child[u] = static_cast<std::uint8_t>(2 * col[u] + (col[u] == target && u != v ? 1 : 0));
        search(st, child);
    }
}

}  // namespace

CanonicalKey canonical_key(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder)
        throw invalid_argument("canonical_key supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
    CanonState st;
    st.n = g.order();
    if (st.n < 2) return 0;
    for (auto [u, v] : g.edges()) {
        st.adj[u] |= 1u << v;
        st.adj[v] |= 1u << u;
    }
    search(st, Colouring{});
    return st.best;
}

Graph graph_from_key(int n, CanonicalKey key) {
    std::vector<Edge> edges;
    int bit = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((key >> --bit) & 1u) edges.emplace_back(i, j);
    return Graph(n, edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

}  // namespace spreadlab
