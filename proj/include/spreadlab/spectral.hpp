#pragma once

#include <string_view>

#include "spreadlab/graph.hpp"
#include "spreadlab/linalg.hpp"

namespace spreadlab {

enum class MatrixKind { distance, dsl };

std::string_view to_string(MatrixKind k);
MatrixKind parse_matrix_kind(std::string_view s);  // "distance" | "dsl"

// D(G). Throws connectivity_error.
IntMatrix distance_matrix(const Graph& g);
IntMatrix distance_matrix(const DistanceData& dd);
// Q(G) = Tr(G) + D(G); row i sums to twice the transmission of i.
IntMatrix distance_signless_laplacian(const Graph& g);
IntMatrix distance_signless_laplacian(const DistanceData& dd);

IntMatrix spectral_matrix(const DistanceData& dd, MatrixKind kind);

struct SpreadReport {
    MatrixKind kind = MatrixKind::distance;
    double rho_max = 0.0;
    double rho_min = 0.0;
    double spread = 0.0;
    Spectrum spectrum;
};

SpreadReport spread(const Graph& g, MatrixKind kind);
SpreadReport spread(const DistanceData& dd, MatrixKind kind);

// Closed-form spectra of the complete bipartite graph K_{a,b}.
Spectrum kab_distance_spectrum(int a, int b);
Spectrum kab_q_spectrum(int a, int b);

struct Extremes {
    double q = 0.0;
    double q_min = 0.0;
    double spread = 0.0;
};

// Largest/least eigenvalue of Q(K_{a,n-a}) for 1 <= a, 2a <= n.
Extremes kab_q_extremes(int a, int n);

enum class ClosedForm {
    star_distance,  // S_D of the star on n vertices
    deltamax_dsl,   // S_Q of a bipartite graph with a dominating vertex (the star)
    complete_dsl,   // S_Q(K_n)
};

double closed_form_spread(ClosedForm form, int n);

}  // namespace spreadlab
