#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spreadlab/bounds.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/search.hpp"
#include "spreadlab/structures.hpp"

using namespace spreadlab;

namespace {

using i64 = std::int64_t;

// a_i, b_i written out directly from the closed formulas, in plain int64.
struct Coeffs {
    i64 a, b;
};

Coeffs bipartite_distance_coeffs(i64 n, i64 delta, i64 S, i64 Di, i64 tD) {
    // tD = t_{v_i} * Delta
    return {(delta + 1) * (S - 2 * Di - 2 * tD) + 2 * n * delta * delta,
            Di * Di - 2 * S * delta * delta + 2 * Di * tD + tD * tD};
}

Coeffs bipartite_dsl_coeffs(i64 n, i64 delta, i64 W, i64 Di, i64 tD) {
    return {4 * (W - Di - tD) * (delta + 1) + 2 * n * delta * delta + n * Di + n * tD,
            4 * Di * Di + 8 * Di * tD + 4 * tD * tD - 8 * W * delta * delta - 4 * W * Di - 4 * W * tD};
}

Coeffs clique_coeffs(i64 n, i64 w, i64 W, i64 s) {
    return {n * w * (1 - w) + 4 * w * (s - W) - n * s, 4 * W * w * (w - 1) + 4 * s * (W - s)};
}

Coeffs diameter_coeffs(i64 n, i64 d, i64 W, i64 s) {
    return {12 * (1 + d) * (s - W) - n * d * (d + 1) * (d + 2) - 3 * n * s,
            4 * d * (d + 1) * (d + 2) * W + 12 * s * (W - s)};
}

Coeffs cactus_coeffs(i64 n, i64 l, i64 W, i64 s) {
    if (l % 2 == 0) return {l * l * l * n + 4 * n * s - 16 * l * (s - W), 4 * l * l * l * W - 16 * s * (s - W)};
    return {l * l * l * n + 4 * n * s - l * n - 16 * l * (s - W), 4 * (l * l * l - l) * W - 16 * s * (s - W)};
}

i64 trans_sum(const DistanceData& dd, const std::vector<int>& vs) {
    i64 s = 0;
    for (int v : vs) s += dd.trans[v];
    return s;
}

// Checks shared by every method: per-witness coefficients against the
// transcribed formulas, the value, interlacing of the witness quotient,
// quotient consistency and the report aggregates.
void check_report(const Graph& g, const BoundReport& r, const std::vector<Coeffs>& want, i64 den, int sigma) {
    auto dd = all_pairs_distances(g);
    auto full = eigenvalues_symmetric(SymMatrix(spectral_matrix(dd, matrix_of(r.method))));
    REQUIRE(r.witnesses.size() == want.size());
    CHECK(static_cast<i64>(r.denominator) == den);
    CHECK(r.radicand_sign == sigma);
    double best = -1, l1max = -1e300, l2min = 1e300;
    for (std::size_t i = 0; i < want.size(); ++i) {
        const auto& w = r.witnesses[i];
        CHECK(static_cast<i64>(w.a) == want[i].a);
        CHECK(static_cast<i64>(w.b) == want[i].b);
        const i64 radicand = want[i].a * want[i].a + 4 * sigma * want[i].b * den;
        CHECK(static_cast<i64>(w.radicand) == radicand);
        CHECK(radicand >= 0);
        const double value = std::sqrt(static_cast<double>(radicand)) / den;
        CHECK(std::abs(w.value - value) < 1e-9);
        CHECK(w.quotient_consistent);
        auto qs = quotient_spectrum(w.quotient);
        CHECK(std::abs(qs.largest() - qs.smallest() - value) < 1e-8);
        CHECK(std::abs(w.lambda1 - qs.largest()) < 1e-8);
        CHECK(std::abs(w.lambda2 - qs.smallest()) < 1e-8);
        CHECK(interlaces(full, qs, 1e-8).ok);
        best = std::max(best, value);
        l1max = std::max(l1max, w.lambda1);
        l2min = std::min(l2min, w.lambda2);
    }
    CHECK(std::abs(r.bound - best) < 1e-12);
    CHECK(r.radius_lb == l1max);
    CHECK(r.min_ub == l2min);
    CHECK(std::abs(r.true_spread - full.spread()) < 1e-12);
    CHECK(r.bound <= r.true_spread + 1e-8);
    CHECK(r.radius_lb <= full.largest() + 1e-8);
    CHECK(r.min_ub >= full.smallest() - 1e-8);
}

void check_bipartite(const Graph& g, bool dsl) {
    auto r = dsl ? bound_bipartite_dsl(g) : bound_bipartite_distance(g);
    auto dd = all_pairs_distances(g);
    const i64 n = g.order(), delta = g.max_degree();
    if (delta == n - 1) {
        CHECK(r.closed_form);
        CHECK(r.bound == closed_form_spread(dsl ? ClosedForm::deltamax_dsl : ClosedForm::star_distance, n));
        return;
    }
    std::vector<Coeffs> want;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != delta) continue;
        i64 tD = 0;
        for (int u : g.neighbors(v)) tD += dd.trans[u];
        want.push_back(dsl ? bipartite_dsl_coeffs(n, delta, dd.wiener, dd.trans[v], tD)
                           : bipartite_distance_coeffs(n, delta, 2 * dd.wiener, dd.trans[v], tD));
    }
    check_report(g, r, want, (delta + 1) * (n - delta - 1), 1);
    CHECK(r.parameter == delta);
}

void check_clique(const Graph& g) {
    auto r = bound_clique(g);
    auto dd = all_pairs_distances(g);
    const i64 n = g.order();
    auto cliques = oracle::brute_max_cliques(g);
    const i64 w = static_cast<i64>(cliques.front().size());
    if (w == n) {
        CHECK(r.closed_form);
        CHECK(r.bound == closed_form_spread(ClosedForm::complete_dsl, n));
        return;
    }
    std::vector<Coeffs> want;
    for (const auto& c : cliques) want.push_back(clique_coeffs(n, w, dd.wiener, trans_sum(dd, c)));
    check_report(g, r, want, (n - w) * w, -1);
}

void check_diameter(const Graph& g) {
    auto dd = all_pairs_distances(g);
    const i64 n = g.order(), d = dd.diameter;
    if (d == n - 1 && n > 2) {
        CHECK_THROWS_AS(bound_diameter(g), degenerate_error);
        return;
    }
    auto r = bound_diameter(g);
    if (d == 1) {
        CHECK(r.closed_form);
        return;
    }
    std::vector<Coeffs> want;
    for (const auto& p : diameter_paths(g, dd).members) want.push_back(diameter_coeffs(n, d, dd.wiener, trans_sum(dd, p)));
    check_report(g, r, want, 3 * (d + 1) * (n - 1 - d), -1);
}

void check_cactus(const Graph& g) {
    auto dd = all_pairs_distances(g);
    auto cycles = cactus_longest_cycles(g, dd);
    const i64 n = g.order(), l = cycles.parameter;
    if (l == n) {
        CHECK_THROWS_AS(bound_cactus(g), degenerate_error);
        return;
    }
    auto r = bound_cactus(g);
    std::vector<Coeffs> want;
    for (const auto& c : cycles.members) want.push_back(cactus_coeffs(n, l, dd.wiener, trans_sum(dd, c)));
    check_report(g, r, want, 4 * l * (n - l), -1);
}

}  // namespace

TEST_CASE("bipartite distance bound examples") {
    auto g1 = bound_bipartite_distance(builtin("G1"));
    CHECK(std::abs(g1.bound - 15.5960) < 5e-4);
    CHECK(g1.witnesses.size() == 3);
    auto g2 = bound_bipartite_distance(builtin("G2"));
    CHECK(std::abs(g2.bound - 19.0059) < 5e-4);
    CHECK(std::abs(g2.true_spread - 20.9674) < 5e-4);
    check_bipartite(builtin("G1"), false);
    check_bipartite(builtin("G2"), false);
    // K_{3,3}: sqrt(a^2 + 4 b den)/den = 7.5, below the true spread 9, so not tight.
    auto k33 = bound_bipartite_distance(complete_bipartite(3, 3));
    CHECK(k33.bound == doctest::Approx(7.5).epsilon(1e-12));
    CHECK(k33.true_spread == doctest::Approx(9.0).epsilon(1e-12));
    check_bipartite(complete_bipartite(3, 3), false);
    CHECK_THROWS_AS(bound_bipartite_distance(cycle(5)), not_bipartite_error);
    CHECK_THROWS_AS(bound_bipartite_distance(Graph(4, {{0, 1}, {2, 3}})), connectivity_error);
    auto s = bound_bipartite_distance(star(6));
    CHECK(s.closed_form);
    CHECK(s.closed_form_case == "star");
}

TEST_CASE("bipartite dsl bound examples") {
    auto g1 = bound_bipartite_dsl(builtin("G1"));
    CHECK(std::abs(g1.bound - 15.638494) < 1e-6);
    auto g2 = bound_bipartite_dsl(builtin("G2"));
    CHECK(std::abs(g2.bound - 17.861142) < 1e-6);
    auto s5 = bound_bipartite_dsl(star(5));
    CHECK(s5.closed_form);
    CHECK(s5.bound == doctest::Approx(std::sqrt(97.0)).epsilon(1e-12));
    check_bipartite(builtin("G1"), true);
    check_bipartite(builtin("G2"), true);
    CHECK_THROWS_AS(bound_bipartite_dsl(complete(3)), not_bipartite_error);
}

TEST_CASE("clique bound examples") {
    auto kt = bound_clique(kite(5, 3));
    CHECK(std::abs(kt.bound - 10.6158) < 5e-4);
    CHECK(std::abs(kt.true_spread - 11.3395) < 5e-4);
    check_clique(kite(5, 3));
    for (int n = 2; n <= 8; ++n) {
        auto r = bound_clique(complete(n));
        CHECK(r.closed_form);
        CHECK(r.bound == n);
    }
    auto c4 = bound_clique(cycle(4));
    CHECK(c4.witnesses.size() == 4);
    check_clique(cycle(4));
}

TEST_CASE("diameter bound examples") {
    auto g1 = bound_diameter(builtin("G1"));
    CHECK(g1.witnesses.size() == 2);
    CHECK(std::abs(g1.witnesses[0].value - 12.762837) < 1e-6);
    CHECK(std::abs(g1.witnesses[1].value - 15.352199) < 1e-6);
    check_diameter(builtin("G1"));
    auto k5 = bound_diameter(complete(5));
    CHECK(k5.closed_form);
    CHECK(k5.bound == 5);
    auto c6 = bound_diameter(cycle(6));
    CHECK(c6.witnesses.size() == 6);
    check_diameter(cycle(6));
    CHECK_THROWS_AS(bound_diameter(path(5)), degenerate_error);
}

TEST_CASE("diameter bound with a truncated witness list stays a lower bound") {
    auto c = cycle(20);
    auto r = bound_diameter(c, 3);
    CHECK(r.witnesses_truncated);
    CHECK(r.witnesses.size() == 3);
    CHECK(r.bound <= bound_diameter(c).bound + 1e-12);
}

TEST_CASE("cactus bound examples") {
    auto g3 = bound_cactus(builtin("G3"));
    CHECK(std::abs(g3.bound - 11.5) < 0.05);
    CHECK(std::abs(g3.true_spread - 12.8) < 0.05);
    check_cactus(builtin("G3"));
    auto g4 = bound_cactus(builtin("G4"));
    CHECK(std::abs(g4.bound - 14.3234) < 5e-4);
    check_cactus(builtin("G4"));
    Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto p = bound_cactus(paw);
    CHECK(p.bound <= p.true_spread + 1e-8);
    check_cactus(paw);
    CHECK_THROWS_AS(bound_cactus(cycle(5)), degenerate_error);
    CHECK_THROWS_AS(bound_cactus(complete(4)), not_cactus_error);
    CHECK_THROWS_AS(bound_cactus(path(4)), acyclic_error);
}

TEST_CASE("soundness and coefficients over all connected bipartite graphs n <= 7") {
    std::size_t graphs = 0;
    for (int n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_connected_bipartite(n)) {
            ++graphs;
            check_bipartite(g, false);
            check_bipartite(g, true);
        }
    CHECK(graphs == 1 + 1 + 3 + 5 + 17 + 44);
}

TEST_CASE("soundness of clique and diameter bounds on random graphs") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 500; ++t) {
        const int n = 2 + t % 8;
        auto g = oracle::random_connected(rng, n, 0.1 + 0.1 * (t % 7));
        check_clique(g);
        check_diameter(g);
    }
}

TEST_CASE("soundness of the cactus bound on random cacti") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 300; ++t) check_cactus(oracle::random_cactus(rng, 1 + t % 5, 7));
}

TEST_CASE("legacy quotient formula") {
    auto r = legacy_2012_counterexample(builtin("G1"), 0);
    CHECK(r.b1(0, 0) == Rational(18, 4));
    CHECK(r.b1(0, 1) == Rational(19, 4));
    CHECK(r.b1(1, 0) == Rational(19, 3));
    CHECK(r.b1(1, 1) == Rational(28, 3));
    CHECK(r.b2(0, 0) == Rational(18, 4));
    CHECK(r.b2(0, 1) == Rational(25, 4));
    CHECK(r.b2(1, 0) == Rational(25, 3));
    CHECK(r.b2(1, 1) == Rational(16, 3));
    CHECK_FALSE(r.equal);

    auto p4 = legacy_2012_counterexample(path(4), 1);
    CHECK_FALSE(p4.equal);
    // b12(B1) - b12(B2) = (Delta - D_v) / (Delta + 1)
    auto dd = all_pairs_distances(path(4));
    CHECK(p4.b1(0, 1) - p4.b2(0, 1) == Rational(2 - dd.trans[1], 3));

    for (int n = 3; n <= 7; ++n)
        for (const auto& g : enumerate_connected_bipartite(n)) {
            const int delta = g.max_degree();
            if (delta > n - 2) continue;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == delta) CHECK_FALSE(legacy_2012_counterexample(g, v).equal);
        }

    CHECK_THROWS_AS(legacy_2012_counterexample(path(4), 0), domain_error);
    CHECK_THROWS_AS(legacy_2012_counterexample(star(4), 0), domain_error);
    CHECK_THROWS_AS(legacy_2012_counterexample(cycle(5), 0), not_bipartite_error);
}

TEST_CASE("method names") {
    for (auto m : {BoundMethod::bipartite_distance, BoundMethod::bipartite_dsl, BoundMethod::clique,
                   BoundMethod::diameter, BoundMethod::cactus})
        CHECK(parse_bound_method(to_string(m)) == m);
    CHECK(matrix_of(BoundMethod::bipartite_distance) == MatrixKind::distance);
    CHECK(matrix_of(BoundMethod::cactus) == MatrixKind::dsl);
    CHECK_THROWS_AS(parse_bound_method("legacy"), invalid_argument);
    CHECK(to_string(Int128(-12345)) == "-12345");
    CHECK(to_string(Int128(0)) == "0");
}
