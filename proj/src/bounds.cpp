#include "spreadlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spreadlab/error.hpp"
#include "spreadlab/structures.hpp"

namespace spreadlab {

std::string_view to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::bipartite_distance: return "bipartite-distance";
        case BoundMethod::bipartite_dsl: return "bipartite-dsl";
        case BoundMethod::clique: return "clique";
        case BoundMethod::diameter: return "diameter";
        case BoundMethod::cactus: return "cactus";
    }
    return "?";
}

BoundMethod parse_bound_method(std::string_view s) {
    for (auto m : {BoundMethod::bipartite_distance, BoundMethod::bipartite_dsl, BoundMethod::clique,
                   BoundMethod::diameter, BoundMethod::cactus})
        if (s == to_string(m)) return m;
    throw invalid_argument("unknown bound method '" + std::string(s) + "'");
}

MatrixKind matrix_of(BoundMethod m) {
    return m == BoundMethod::bipartite_distance ? MatrixKind::distance : MatrixKind::dsl;
}

std::string to_string(Int128 x) {
    if (x == 0) return "0";
    const bool neg = x < 0;
    std::string s;
    while (x != 0) {
        int digit = static_cast<int>(x % 10);
        s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

namespace {

struct Shape {
    Int128 den;
    int tau;
    int sigma;
};

BoundWitness evaluate_witness(const IntMatrix& m, std::vector<int> block, Int128 a, Int128 b,
                              Rational weight, const Shape& shape) {
    BoundWitness w;
    w.a = a;
    w.b = b;
    w.weight = weight;
    const auto n = m.order();
    w.quotient = quotient(m, Partition::two_block(n, block));
    w.vertices = std::move(block);
    std::tie(w.lambda1, w.lambda2) = eig2_real(w.quotient.as_matrix2());

    w.radicand = a * a + 4 * shape.sigma * b * shape.den;
    if (w.radicand < 0) throw numeric_error("negative radicand " + to_string(w.radicand));
    w.value = static_cast<double>(std::sqrt(static_cast<long double>(w.radicand)) /
                                  static_cast<long double>(shape.den));

    const auto& sums = w.quotient.block_sums;
    const Int128 n1 = static_cast<Int128>(w.quotient.block_sizes[0]);
    const Int128 n2 = static_cast<Int128>(w.quotient.block_sizes[1]);
    const Int128 trace_num = Int128(sums(0, 0)) * n2 + Int128(sums(1, 1)) * n1;
    const Int128 det_num = Int128(sums(0, 0)) * sums(1, 1) - Int128(sums(0, 1)) * sums(1, 0);
    w.quotient_consistent = trace_num * shape.den == shape.tau * a * n1 * n2 &&
                            det_num * shape.den == -shape.sigma * b * n1 * n2;
    return w;
}

void finalize(BoundReport& r) {
    r.bound = 0.0;
    r.radius_lb = -std::numeric_limits<double>::infinity();
    r.min_ub = std::numeric_limits<double>::infinity();
    for (const auto& w : r.witnesses) {
        r.bound = std::max(r.bound, w.value);
        r.radius_lb = std::max(r.radius_lb, w.lambda1);
        r.min_ub = std::min(r.min_ub, w.lambda2);
    }
}

void set_closed_form(BoundReport& r, std::string label, double bound, double q, double q_min) {
    r.closed_form = true;
    r.closed_form_case = std::move(label);
    r.bound = bound;
    r.radius_lb = q;
    r.min_ub = q_min;
}

void require_bipartite(const Graph& g) {
    auto bp = bipartition(g);
    if (auto* odd = std::get_if<OddWalk>(&bp)) throw not_bipartite_error(odd->walk);
}

BoundReport bound_bipartite(const Graph& g, BoundMethod method) {
    require_connected(g);
    require_bipartite(g);
    const int n = g.order();
    const MatrixKind kind = matrix_of(method);
    if (kind == MatrixKind::dsl && n < 2)
        throw domain_error("the bipartite signless bound needs n >= 2");
    const auto dd = all_pairs_distances(g);

    BoundReport r;
    r.method = method;
    r.n = n;
    const Int128 delta = g.max_degree();
    r.parameter = static_cast<int>(delta);
    r.trace_sign = 1;
    r.radicand_sign = 1;
    r.true_spread = spread(dd, kind).spread;

    if (delta == n - 1) {
        // A bipartite graph with a dominating vertex is the star K_{1,n-1}.
        if (kind == MatrixKind::distance) {
            double q = 0.0, q_min = 0.0;
            if (n == 2) q = 1.0, q_min = -1.0;
            if (n >= 3) q = n - 2 + std::sqrt(double(n) * n - 3.0 * n + 3.0), q_min = -2.0;
            set_closed_form(r, "star", closed_form_spread(ClosedForm::star_distance, n), q, q_min);
        } else {
            const auto e = kab_q_extremes(1, n);
            set_closed_form(r, "star", closed_form_spread(ClosedForm::deltamax_dsl, n), e.q, e.q_min);
        }
        return r;
    }

    const Int128 W = dd.wiener;
    const Int128 S = 2 * W;
    const Shape shape{(delta + 1) * (n - delta - 1), 1, 1};
    r.denominator = shape.den;
    const auto m = spectral_matrix(dd, kind);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != delta) continue;
        const Int128 D = dd.trans[v];
        Int128 tD = 0;  // t_v * Delta, an integer
        for (int u : g.neighbors(v)) tD += dd.trans[u];
        Int128 a, b;
        if (kind == MatrixKind::distance) {
            a = (delta + 1) * (S - 2 * D - 2 * tD) + 2 * n * delta * delta;
            b = D * D - 2 * S * delta * delta + 2 * D * tD + tD * tD;
        } else {
            a = 4 * (W - D - tD) * (delta + 1) + 2 * n * delta * delta + n * D + n * tD;
            b = 4 * D * D + 8 * D * tD + 4 * tD * tD - 8 * W * delta * delta - 4 * W * D - 4 * W * tD;
        }
        std::vector<int> block{v};
        block.insert(block.end(), g.neighbors(v).begin(), g.neighbors(v).end());
        r.witnesses.push_back(evaluate_witness(m, std::move(block), a, b,
                                               average_distance_degree(g, dd, v), shape));
    }
    finalize(r);
    return r;
}

void complete_graph_case(BoundReport& r, int n) {
    set_closed_form(r, "complete", closed_form_spread(ClosedForm::complete_dsl, n), 2.0 * n - 2,
                    n == 1 ? 0.0 : n - 2.0);
}

}  // namespace

BoundReport bound_bipartite_distance(const Graph& g) {
    return bound_bipartite(g, BoundMethod::bipartite_distance);
}

BoundReport bound_bipartite_dsl(const Graph& g) { return bound_bipartite(g, BoundMethod::bipartite_dsl); }

BoundReport bound_clique(const Graph& g) {
    require_connected(g);
    const auto dd = all_pairs_distances(g);
    const int n = g.order();
    const auto cliques = maximum_cliques(g, dd);
    const Int128 w = cliques.parameter;
    if (w < 2) throw domain_error("the clique bound needs clique number >= 2");

    BoundReport r;
    r.method = BoundMethod::clique;
    r.n = n;
    r.parameter = static_cast<int>(w);
    r.trace_sign = -1;
    r.radicand_sign = -1;
    r.true_spread = spread(dd, MatrixKind::dsl).spread;
    if (w == n) {
        complete_graph_case(r, n);
        return r;
    }
    const Int128 W = dd.wiener;
    const Shape shape{(n - w) * w, -1, -1};
    r.denominator = shape.den;
    const auto q = distance_signless_laplacian(dd);
    for (std::size_t i = 0; i < cliques.members.size(); ++i) {
        const Int128 s = cliques.s_values[i];
        const Int128 a = n * w * (1 - w) + 4 * w * (s - W) - n * s;
        const Int128 b = 4 * W * w * (w - 1) + 4 * s * (W - s);
        r.witnesses.push_back(evaluate_witness(q, cliques.members[i], a, b, Rational(cliques.s_values[i]), shape));
    }
    finalize(r);
    return r;
}

BoundReport bound_diameter(const Graph& g, int path_cap) {
    require_connected(g);
    const auto dd = all_pairs_distances(g);
    const int n = g.order();
    const Int128 d = dd.diameter;

    BoundReport r;
    r.method = BoundMethod::diameter;
    r.n = n;
    r.parameter = static_cast<int>(d);
    r.trace_sign = -1;
    r.radicand_sign = -1;
    if (n < 2) throw domain_error("the diameter bound needs n >= 2");
    r.true_spread = spread(dd, MatrixKind::dsl).spread;
    if (d == 1) {
        complete_graph_case(r, n);
        return r;
    }
    if (d == n - 1)
        throw degenerate_error("diameter n-1: a diameter path covers every vertex, so the partition has an empty block");

    const auto paths = diameter_paths(g, dd, path_cap);
    r.witnesses_truncated = paths.truncated;
    const Int128 W = dd.wiener;
    const Int128 T = path_internal_sum(static_cast<int>(d));
    const Shape shape{3 * (d + 1) * (n - 1 - d), -1, -1};
    r.denominator = shape.den;
    const auto q = distance_signless_laplacian(dd);
    for (std::size_t i = 0; i < paths.members.size(); ++i) {
        const Int128 s = paths.s_values[i];
        const Int128 a = 12 * (1 + d) * (s - W) - n * 3 * T - 3 * n * s;
        const Int128 b = 12 * T * W + 12 * s * (W - s);
        r.witnesses.push_back(evaluate_witness(q, paths.members[i], a, b, Rational(paths.s_values[i]), shape));
    }
    finalize(r);
    return r;
}

BoundReport bound_cactus(const Graph& g) {
    require_connected(g);
    const auto dd = all_pairs_distances(g);
    const int n = g.order();
    const auto cycles = cactus_longest_cycles(g, dd);
    const Int128 l = cycles.parameter;
    if (l == n) throw degenerate_error("the graph is a single cycle: the partition has an empty block");

    BoundReport r;
    r.method = BoundMethod::cactus;
    r.n = n;
    r.parameter = static_cast<int>(l);
    r.trace_sign = 1;
    r.radicand_sign = -1;
    r.true_spread = spread(dd, MatrixKind::dsl).spread;

    const Int128 W = dd.wiener;
    const Shape shape{4 * l * (n - l), 1, -1};
    r.denominator = shape.den;
    const auto q = distance_signless_laplacian(dd);
    const bool even = l % 2 == 0;
    for (std::size_t i = 0; i < cycles.members.size(); ++i) {
        const Int128 s = cycles.s_values[i];
        const Int128 a = even ? l * l * l * n + 4 * n * s - 16 * l * (s - W)
                              : l * l * l * n + 4 * n * s - l * n - 16 * l * (s - W);
        const Int128 b = even ? 4 * l * l * l * W - 16 * s * (s - W)
                              : 4 * (l * l * l - l) * W - 16 * s * (s - W);
        r.witnesses.push_back(evaluate_witness(q, cycles.members[i], a, b, Rational(cycles.s_values[i]), shape));
    }
    finalize(r);
    return r;
}

BoundReport evaluate_bound(const Graph& g, BoundMethod m) {
    switch (m) {
        case BoundMethod::bipartite_distance: return bound_bipartite_distance(g);
        case BoundMethod::bipartite_dsl: return bound_bipartite_dsl(g);
        case BoundMethod::clique: return bound_clique(g);
        case BoundMethod::diameter: return bound_diameter(g);
        case BoundMethod::cactus: return bound_cactus(g);
    }
    throw invalid_argument("unknown bound method");
}

LegacyComparison legacy_2012_counterexample(const Graph& g, int v) {
    require_connected(g);
    require_bipartite(g);
    const int n = g.order();
    if (v < 0 || v >= n) throw invalid_argument("vertex out of range");
    const std::int64_t delta = g.max_degree();
    if (g.degree(v) != delta) throw domain_error("vertex " + std::to_string(v + 1) + " does not have maximum degree");
    if (delta > n - 2) throw domain_error("the legacy quotient formula needs Delta <= n-2");
    const auto dd = all_pairs_distances(g);

    std::int64_t tD = 0;
    for (int u : g.neighbors(v)) tD += dd.trans[u];
    const std::int64_t S = 2 * dd.wiener;
    const std::int64_t rest = n - delta - 1;

    LegacyComparison out;
    out.vertex = v;
    out.b1 = SquareMatrix<Rational>(2);
    out.b1(0, 0) = Rational(2 * delta * delta, delta + 1);
    out.b1(0, 1) = Rational(tD + delta - 2 * delta * delta, delta + 1);
    out.b1(1, 0) = Rational(tD + delta - 2 * delta * delta, rest);
    out.b1(1, 1) = Rational(S - 2 * tD + 2 * delta * (delta - 1), rest);

    std::vector<int> block{v};
    block.insert(block.end(), g.neighbors(v).begin(), g.neighbors(v).end());
    out.b2 = quotient(dd.dist, Partition::two_block(n, block));
    out.equal = out.b1 == out.b2.entries;
    return out;
}

}  // namespace spreadlab
