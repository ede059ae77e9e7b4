// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spreadlab/bounds.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/search.hpp"
#include "spreadlab/spectral.hpp"
#include "spreadlab/structures.hpp"
#include "spreadlab/tables.hpp"

using namespace spreadlab;

namespace {

struct Criterion {
    bool ok = true;
    std::vector<std::string> notes;
    std::vector<std::string> info;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void near(double got, double want, double tol, const std::string& what) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: expected %.6f, computed %.6f (tol %g)", what.c_str(), want, got, tol);
        expect(std::abs(got - want) <= tol, buf);
    }
};

bool cells(Criterion& c, const std::string& table) {
    for (const auto& cell : verify_tables())
        if (cell.table == table)
            c.near(cell.computed, cell.expected, cell.tolerance, cell.table + " " + cell.row + " " + cell.column);
    return c.ok;
}

Criterion c1() {
    Criterion c;
    cells(c, "distance-bipartite");
    return c;
}

Criterion c2() {
    Criterion c;
    cells(c, "dsl-bipartite");
    return c;
}

Criterion c3() {
    Criterion c;
    cells(c, "dsl-order4");
    return c;
}

Criterion c4() {
    Criterion c;
    cells(c, "dsl-order5");
    return c;
}

Criterion c5() {
    Criterion c;
    cells(c, "clique-kite");
    return c;
}

Criterion c6() {
    Criterion c;
    cells(c, "diameter");
    cells(c, "cactus");
    return c;
}

Criterion c7() {
    Criterion c;
    auto r = legacy_2012_counterexample(builtin("G1"), 0);
    const Rational b1[2][2] = {{Rational(18, 4), Rational(19, 4)}, {Rational(19, 3), Rational(28, 3)}};
    const Rational b2[2][2] = {{Rational(18, 4), Rational(25, 4)}, {Rational(25, 3), Rational(16, 3)}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            c.expect(r.b1(i, j) == b1[i][j], "B1 entry " + std::to_string(i) + "," + std::to_string(j));
            c.expect(r.b2(i, j) == b2[i][j], "B2 entry " + std::to_string(i) + "," + std::to_string(j));
        }
    c.expect(!r.equal, "B1 and B2 compare equal");
    return c;
}

Criterion c8() {
    Criterion c;
    auto same = [&](const Spectrum& a, const Spectrum& b, const std::string& what) {
        bool ok = a.size() == b.size();
        for (std::size_t i = 0; ok && i < a.size(); ++i) ok = std::abs(a.values()[i] - b.values()[i]) <= 1e-8;
        c.expect(ok, what);
    };
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; a + b <= 9; ++b) {
            auto g = complete_bipartite(a, b);
            const std::string tag = "K" + std::to_string(a) + "," + std::to_string(b);
            same(kab_distance_spectrum(a, b), eigenvalues_symmetric(SymMatrix(distance_matrix(g))), tag + " D");
            same(kab_q_spectrum(a, b), eigenvalues_symmetric(SymMatrix(distance_signless_laplacian(g))), tag + " Q");
        }
    for (int n = 3; n <= 30; ++n) {
        c.near(closed_form_spread(ClosedForm::star_distance, n), spread(star(n), MatrixKind::distance).spread, 1e-8,
               "star S_D n=" + std::to_string(n));
        c.near(closed_form_spread(ClosedForm::deltamax_dsl, n), spread(star(n), MatrixKind::dsl).spread, 1e-8,
               "star S_Q n=" + std::to_string(n));
    }
    for (int n = 1; n <= 30; ++n)
        c.near(spread(complete(n), MatrixKind::dsl).spread, closed_form_spread(ClosedForm::complete_dsl, n), 1e-8,
               "S_Q(K" + std::to_string(n) + ")");
    return c;
}

void check_bound(Criterion& c, const Graph& g, BoundMethod m, const std::string& tag) {
    BoundReport r;
    try {
        r = evaluate_bound(g, m);
    } catch (const degenerate_error&) {
        return;
    }
    c.expect(r.bound <= r.true_spread + 1e-8, tag + ": bound exceeds spread");
    const auto full = eigenvalues_symmetric(SymMatrix(spectral_matrix(all_pairs_distances(g), matrix_of(m))));
    for (const auto& w : r.witnesses) {
        c.expect(w.quotient_consistent, tag + ": coefficients disagree with the quotient");
        auto q = quotient_spectrum(w.quotient);
        c.expect(std::abs(q.largest() - q.smallest() - w.value) <= 1e-8, tag + ": witness value vs quotient");
        c.expect(interlaces(full, q, 1e-8).ok, tag + ": witness quotient does not interlace");
    }
}

Criterion c9() {
    Criterion c;
    std::size_t bipartite = 0;
    for (int n = 2; n <= 7; ++n)
        for (const auto& g : enumerate_connected_bipartite(n)) {
            ++bipartite;
            const std::string tag = write_graph6(g);
            check_bound(c, g, BoundMethod::bipartite_distance, tag + " bipartite-distance");
            check_bound(c, g, BoundMethod::bipartite_dsl, tag + " bipartite-dsl");
        }
    c.expect(bipartite == 71, "connected bipartite classes n<=7: " + std::to_string(bipartite));

    std::mt19937_64 rng(2024);
    for (int t = 0; t < 500; ++t) {
        auto g = oracle::random_connected(rng, 2 + t % 8, 0.1 + 0.1 * (t % 7));
        const std::string tag = write_graph6(g);
        check_bound(c, g, BoundMethod::clique, tag + " clique");
        check_bound(c, g, BoundMethod::diameter, tag + " diameter");
    }
    for (int t = 0; t < 300; ++t) {
        auto g = oracle::random_cactus(rng, 1 + t % 5, 7);
        check_bound(c, g, BoundMethod::cactus, write_graph6(g) + " cactus");
    }

    // interlacing for random two- and three-block partitions
    for (int t = 0; t < 200; ++t) {
        const int n = 3 + t % 8;
        auto g = oracle::random_connected(rng, n, 0.3);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const int blocks = std::min(n - 1, 2 + t % 2);
        std::vector<std::vector<int>> parts(blocks);
        for (int i = 0; i < n; ++i) parts[i < blocks ? i : rng() % blocks].push_back(perm[i]);
        Partition p(n, parts);
        auto dd = all_pairs_distances(g);
        for (auto kind : {MatrixKind::distance, MatrixKind::dsl}) {
            auto m = spectral_matrix(dd, kind);
            c.expect(interlaces(eigenvalues_symmetric(SymMatrix(m)), quotient_spectrum(quotient(m, p)), 1e-8).ok,
                     write_graph6(g) + " random partition interlacing");
        }
    }
    return c;
}

Criterion c10() {
    Criterion c;
    for (int n = 4; n <= 10; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        auto r = check_conjecture(n);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool iso = isomorphic(graph_from_key(n, r.minimizer.key), complete_bipartite(n / 2, n - n / 2));
        c.expect(r.complete && r.holds && iso, "conjecture n=" + std::to_string(n));
        char line[200];
        std::snprintf(line, sizeof line, "n=%-2d classes=%-5llu minimizer=%s S_Q=%.6f %s (%.2fs)", n,
                    static_cast<unsigned long long>(r.graphs_checked), r.minimizer.graph6.c_str(), r.minimizer.sq,
                    r.holds ? "holds" : "FAILS", s);
        c.info.push_back(line);
    }
    for (int n = 4; n <= 40; ++n) {
        auto s = check_monotonicity(n);
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            c.expect(s[i] > s[i + 1], "monotonicity n=" + std::to_string(n) + " a=" + std::to_string(i + 1));
    }
    return c;
}

Criterion c11() {
    Criterion c;
    for (int d = 1; d <= 12; ++d) {
        std::int64_t s = 0;
        for (auto& row : oracle::floyd_warshall(path(d + 1)))
            for (auto x : row) s += x;
        c.expect(path_internal_sum(d) == s, "path_internal_sum d=" + std::to_string(d));
        c.expect(3 * s == static_cast<std::int64_t>(d) * (d + 1) * (d + 2), "T identity d=" + std::to_string(d));
    }
    for (int l = 3; l <= 15; ++l) {
        auto dd = all_pairs_distances(cycle(l));
        c.expect(cycle_internal_sum(l) == dd.trans[0], "cycle_internal_sum l=" + std::to_string(l));
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
        {"bipartite distance bound and S_D on G1, G2", c1},
        {"bipartite DSL bound and S_Q on G1, G2", c2},
        {"(q, q_min, S_Q) for K22, P4, S4", c3},
        {"(q, q_min, S_Q) for K23, H1, H2, P5, S5", c4},
        {"clique bound and S_Q on kite(5,3)", c5},
        {"diameter bound on G1, cactus bound and S_Q on G3, G4", c6},
        {"legacy quotient formula differs from the true quotient on G1", c7},
        {"closed-form spectra and spreads vs eigensolver", c8},
        {"soundness, interlacing, quotient consistency", c9},
        {"conjecture n=4..10 and monotonicity n=4..40", c10},
        {"path and cycle internal distance sums", c11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %2zu  %s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
        const std::size_t shown = std::min<std::size_t>(c.notes.size(), 10);
        for (std::size_t k = 0; k < shown; ++k) std::printf("        %s\n", c.notes[k].c_str());
        for (const auto& line : c.info) std::printf("        %s\n", line.c_str());
        if (c.notes.size() > shown) std::printf("        ... %zu more\n", c.notes.size() - shown);
        std::fflush(stdout);
        failed += !c.ok;
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
