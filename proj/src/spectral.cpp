#include "spreadlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "spreadlab/error.hpp"

namespace spreadlab {

std::string_view to_string(MatrixKind k) { return k == MatrixKind::distance ? "distance" : "dsl"; }

MatrixKind parse_matrix_kind(std::string_view s) {
    if (s == "distance" || s == "D") return MatrixKind::distance;
    if (s == "dsl" || s == "Q") return MatrixKind::dsl;
    throw invalid_argument("matrix must be 'distance' or 'dsl', got '" + std::string(s) + "'");
}

IntMatrix distance_matrix(const DistanceData& dd) { return dd.dist; }
IntMatrix distance_matrix(const Graph& g) { return all_pairs_distances(g).dist; }

IntMatrix distance_signless_laplacian(const DistanceData& dd) {
    IntMatrix q = dd.dist;
    for (std::size_t i = 0; i < q.order(); ++i) q(i, i) += dd.trans[i];
    return q;
}

IntMatrix distance_signless_laplacian(const Graph& g) {
    return distance_signless_laplacian(all_pairs_distances(g));
}

IntMatrix spectral_matrix(const DistanceData& dd, MatrixKind kind) {
    return kind == MatrixKind::distance ? distance_matrix(dd) : distance_signless_laplacian(dd);
}

SpreadReport spread(const DistanceData& dd, MatrixKind kind) {
    SpreadReport r;
    r.kind = kind;
    r.spectrum = eigenvalues_symmetric(SymMatrix(spectral_matrix(dd, kind)));
    if (r.spectrum.size() > 0) {
        r.rho_max = r.spectrum.largest();
        r.rho_min = r.spectrum.smallest();
        r.spread = r.rho_max - r.rho_min;
    }
    return r;
}

SpreadReport spread(const Graph& g, MatrixKind kind) { return spread(all_pairs_distances(g), kind); }

Spectrum kab_distance_spectrum(int a, int b) {
    if (a < 1 || b < 1) throw invalid_argument("K_{a,b} needs a,b >= 1");
    const double n = a + b;
    const double root = std::sqrt(n * n - 3.0 * a * b);
    std::vector<double> v(a + b - 2, -2.0);
    v.push_back(n - 2 + root);
    v.push_back(n - 2 - root);
    return Spectrum(std::move(v));
}

Spectrum kab_q_spectrum(int a, int b) {
    if (a < 1 || b < 1) throw invalid_argument("K_{a,b} needs a,b >= 1");
    const int n = a + b;
    std::vector<double> v;
    v.insert(v.end(), b - 1, 2.0 * n - a - 4);
    v.insert(v.end(), a - 1, 2.0 * n - b - 4);
    const double root = std::sqrt(9.0 * n * n - 32.0 * a * b);
    v.push_back((5.0 * n - 8 + root) / 2);
    v.push_back((5.0 * n - 8 - root) / 2);
    return Spectrum(std::move(v));
}

Extremes kab_q_extremes(int a, int n) {
    if (a < 1 || 2 * a > n) throw invalid_argument("kab_q_extremes needs 1 <= a and 2a <= n");
    const double root = std::sqrt(9.0 * n * n - 32.0 * a * (n - a));
    Extremes e;
    e.q = (5.0 * n - 8 + root) / 2;
    e.q_min = a > 1 ? static_cast<double>(n + a - 4) : (5.0 * n - 8 - root) / 2;
    // K_{1,2}: the simple eigenvalue 2n-a-4 = 1 sits below the quadratic root.
    if (n - a - 1 > 0) e.q_min = std::min(e.q_min, 2.0 * n - a - 4);
    e.spread = e.q - e.q_min;
    return e;
}

double closed_form_spread(ClosedForm form, int n) {
    switch (form) {
        case ClosedForm::star_distance:
            if (n < 1) break;
            if (n == 1) return 0.0;
            if (n == 2) return 2.0;
            return n + std::sqrt(static_cast<double>(n) * n - 3.0 * n + 3.0);
        case ClosedForm::deltamax_dsl:
            if (n < 2) break;
            return std::sqrt(9.0 * n * n - 32.0 * n + 32.0);
        case ClosedForm::complete_dsl:
            if (n < 1) break;
            // K_1 has Q = [0]; the formula n holds from n = 2 on.
            return n == 1 ? 0.0 : static_cast<double>(n);
    }
    throw invalid_argument("closed form out of range for n=" + std::to_string(n));
}

}  // namespace spreadlab
