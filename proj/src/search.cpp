#include "spreadlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "spreadlab/error.hpp"
#include "spreadlab/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spreadlab {

namespace {

void check_order(int n) {
    if (n < kMinSearchOrder || n > kMaxSearchOrder)
        throw invalid_argument("search order must be in [" + std::to_string(kMinSearchOrder) + ", " +
                               std::to_string(kMaxSearchOrder) + "], got " + std::to_string(n));
}

// Sub-graphs of K_{a,b}: part A = 0..a-1, part B = a..a+b-1, edge (i, a+j)
// is bit i*b + j of the mask.
struct SplitScanner {
    int a, b;

    std::uint64_t mask_count() const { return std::uint64_t{1} << (a * b); }

    // Connected, and degrees non-increasing inside each part. Every
    // isomorphism class has such a labeling (sort each part by degree), so
    // this prunes without losing classes.
    bool accept(std::uint64_t mask, std::array<std::uint32_t, kMaxCanonicalOrder>& adj) const {
        const int n = a + b;
        adj.fill(0);
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
                if ((mask >> (i * b + j)) & 1u) {
                    adj[i] |= 1u << (a + j);
                    adj[a + j] |= 1u << i;
                }
            }
        }
        for (int v = 0; v + 1 < a; ++v)
            if (__builtin_popcount(adj[v]) < __builtin_popcount(adj[v + 1])) return false;
        for (int v = a; v + 1 < n; ++v)
            if (__builtin_popcount(adj[v]) < __builtin_popcount(adj[v + 1])) return false;
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctz(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (n == 32 ? ~0u : (1u << n) - 1);
    }

    Graph to_graph(const std::array<std::uint32_t, kMaxCanonicalOrder>& adj) const {
        std::vector<Edge> edges;
        for (int i = 0; i < a; ++i)
            for (std::uint32_t m = adj[i]; m; m &= m - 1) edges.emplace_back(i, __builtin_ctz(m));
        return Graph(a + b, edges);
    }
};

struct Chunk {
    int a;
    std::uint64_t begin, end;
};

struct ChunkResult {
    std::uint64_t examined = 0;
    std::vector<CanonicalKey> keys;  // sorted, unique
};

ChunkResult scan_chunk(int n, const Chunk& c) {
    const SplitScanner sc{c.a, n - c.a};
    ChunkResult out;
    std::set<CanonicalKey> keys;
    std::array<std::uint32_t, kMaxCanonicalOrder> adj{};
    for (std::uint64_t mask = c.begin; mask < c.end; ++mask) {
        if (!sc.accept(mask, adj)) continue;
        ++out.examined;
        keys.insert(canonical_key(sc.to_graph(adj)));
    }
    out.keys.assign(keys.begin(), keys.end());
    return out;
}

std::vector<Chunk> make_chunks(int n, std::uint64_t chunk_size) {
    std::vector<Chunk> chunks;
    for (int a = 1; 2 * a <= n; ++a) {
        const std::uint64_t total = SplitScanner{a, n - a}.mask_count();
        for (std::uint64_t begin = 0; begin < total; begin += chunk_size)
            chunks.push_back({a, begin, std::min(total, begin + chunk_size)});
    }
    return chunks;
}

std::string hex(std::uint64_t x) {
    std::ostringstream os;
    os << std::hex << x;
    return os.str();
}

// Checkpoint layout (plain text, one record per line):
//   spreadlab-checkpoint 1
//   n <n> chunk_size <size>
//   done <a> <begin> <end> <examined> <key-hex>...
struct Checkpoint {
    std::map<std::tuple<int, std::uint64_t, std::uint64_t>, ChunkResult> done;

    static Checkpoint load(const std::string& path, int n, std::uint64_t chunk_size) {
        Checkpoint cp;
        std::ifstream in(path);
        if (!in) return cp;
        std::string line;
        if (!std::getline(in, line) || line != "spreadlab-checkpoint 1")
            throw invalid_argument("checkpoint '" + path + "' has an unknown header");
        int file_n = 0;
        std::uint64_t file_chunk = 0;
        std::string tag_n, tag_c;
        if (!std::getline(in, line)) return cp;
        std::istringstream header(line);
        header >> tag_n >> file_n >> tag_c >> file_chunk;
        if (tag_n != "n" || tag_c != "chunk_size" || file_n != n || file_chunk != chunk_size)
            throw invalid_argument("checkpoint '" + path + "' was written for a different run");
        while (std::getline(in, line)) {
            std::istringstream rec(line);
            std::string tag;
            int a;
            std::uint64_t begin, end;
            ChunkResult r;
            if (!(rec >> tag >> a >> begin >> end >> r.examined) || tag != "done") continue;  // torn write
            std::string k;
            while (rec >> k) r.keys.push_back(std::stoull(k, nullptr, 16));
            cp.done[{a, begin, end}] = std::move(r);
        }
        return cp;
    }
};

void write_checkpoint_header(const std::string& path, int n, std::uint64_t chunk_size) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw invalid_argument("cannot write checkpoint '" + path + "'");
    out << "spreadlab-checkpoint 1\n" << "n " << n << " chunk_size " << chunk_size << '\n';
}

void append_checkpoint(std::ofstream& out, const Chunk& c, const ChunkResult& r) {
    out << "done " << c.a << ' ' << c.begin << ' ' << c.end << ' ' << r.examined;
    for (auto k : r.keys) out << ' ' << hex(k);
    out << '\n';
    out.flush();
}

void evaluate_classes(int n, const std::set<CanonicalKey>& keys, ConjectureReport& rep, bool parallel) {
    rep.classes.assign(keys.size(), {});
    std::vector<CanonicalKey> ordered(keys.begin(), keys.end());
    const auto count = static_cast<std::int64_t>(ordered.size());
    auto eval = [&](std::int64_t i) {
        const Graph g = graph_from_key(n, ordered[i]);
        rep.classes[i] = {ordered[i], write_graph6(g), spread(g, MatrixKind::dsl).spread};
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) eval(i);
    } else {
        for (std::int64_t i = 0; i < count; ++i) eval(i);
    }
}

void decide(int n, ConjectureReport& rep) {
    rep.n = n;
    rep.graphs_checked = rep.classes.size();
    const Graph balanced = complete_bipartite(n / 2, n - n / 2);
    rep.reference = spread(balanced, MatrixKind::dsl).spread;
    const CanonicalKey balanced_key = canonical_key(balanced);
    rep.holds = rep.complete;
    for (const auto& c : rep.classes) {
        if (rep.minimizer.graph6.empty() || c.sq < rep.minimizer.sq) rep.minimizer = c;
        const bool below = c.sq < rep.reference - kConjectureTolerance;
        // A near-tie only counts as equality when it is the balanced K_{a,b} itself.
        const bool tie = std::abs(c.sq - rep.reference) <= kConjectureTolerance;
        if (below || (tie && c.key != balanced_key)) {
            rep.counterexamples.push_back(c);
            rep.holds = false;
        }
    }
    rep.minimizer_is_balanced_kab = !rep.minimizer.graph6.empty() && rep.minimizer.key == balanced_key;
}

}  // namespace

std::vector<double> check_monotonicity(int n) {
    if (n < 4) throw invalid_argument("check_monotonicity needs n >= 4");
    std::vector<double> out;
    for (int a = 1; 2 * a <= n; ++a) out.push_back(kab_q_extremes(a, n).spread);
    return out;
}

ConjectureReport check_conjecture(int n, const ConjectureOptions& opts) {
    check_order(n);
    if (opts.chunk_size == 0) throw invalid_argument("chunk size must be positive");
    const auto start = std::chrono::steady_clock::now();
    ConjectureReport rep;
#ifdef _OPENMP
    rep.threads = omp_get_max_threads();
#endif
    const auto chunks = make_chunks(n, opts.chunk_size);
    rep.chunks_total = chunks.size();

    Checkpoint cp;
    std::ofstream cp_out;
    if (opts.checkpoint_path) {
        cp = Checkpoint::load(*opts.checkpoint_path, n, opts.chunk_size);
        if (cp.done.empty()) write_checkpoint_header(*opts.checkpoint_path, n, opts.chunk_size);
        cp_out.open(*opts.checkpoint_path, std::ios::app);
    }

    std::vector<Chunk> todo;
    std::vector<ChunkResult> results;
    for (const auto& c : chunks) {
        auto it = cp.done.find({c.a, c.begin, c.end});
        if (it != cp.done.end()) {
            results.push_back(it->second);
            ++rep.chunks_resumed;
        } else {
            todo.push_back(c);
        }
    }
    if (opts.max_new_chunks && todo.size() > *opts.max_new_chunks) {
        todo.resize(*opts.max_new_chunks);
        rep.complete = false;
    }

    std::vector<ChunkResult> fresh(todo.size());
    const auto todo_count = static_cast<std::int64_t>(todo.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < todo_count; ++i) {
        fresh[i] = scan_chunk(n, todo[i]);
        if (cp_out.is_open()) {
#pragma omp critical(spreadlab_checkpoint)
            append_checkpoint(cp_out, todo[i], fresh[i]);
        }
    }
    results.insert(results.end(), fresh.begin(), fresh.end());

    std::set<CanonicalKey> keys;
    for (const auto& r : results) {
        rep.labeled_examined += r.examined;
        keys.insert(r.keys.begin(), r.keys.end());
    }
    evaluate_classes(n, keys, rep, true);
    decide(n, rep);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

ConjectureReport check_conjecture_serial(int n) {
    check_order(n);
    const auto start = std::chrono::steady_clock::now();
    ConjectureReport rep;
    std::set<CanonicalKey> keys;
    for (int a = 1; 2 * a <= n; ++a) {
        const auto r = scan_chunk(n, {a, 0, SplitScanner{a, n - a}.mask_count()});
        rep.labeled_examined += r.examined;
        keys.insert(r.keys.begin(), r.keys.end());
        ++rep.chunks_total;
    }
    evaluate_classes(n, keys, rep, false);
    decide(n, rep);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<Graph> enumerate_connected_bipartite(int n) {
    check_order(n);
    const auto chunks = make_chunks(n, 1u << 14);
    std::vector<ChunkResult> results(chunks.size());
    const auto count = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) results[i] = scan_chunk(n, chunks[i]);
    std::set<CanonicalKey> keys;
    for (const auto& r : results) keys.insert(r.keys.begin(), r.keys.end());
    std::vector<Graph> out;
    for (auto k : keys) out.push_back(graph_from_key(n, k));
    return out;
}

std::vector<Graph> enumerate_connected_bipartite_serial(int n) {
    check_order(n);
    std::set<CanonicalKey> keys;
    for (int a = 1; 2 * a <= n; ++a) {
        const auto r = scan_chunk(n, {a, 0, SplitScanner{a, n - a}.mask_count()});
        keys.insert(r.keys.begin(), r.keys.end());
    }
    std::vector<Graph> out;
    for (auto k : keys) out.push_back(graph_from_key(n, k));
    return out;
}

}  // namespace spreadlab
