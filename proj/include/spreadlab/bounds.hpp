#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/quotient.hpp"
#include "spreadlab/spectral.hpp"

namespace spreadlab {

__extension__ typedef __int128 Int128;

enum class BoundMethod { bipartite_distance, bipartite_dsl, clique, diameter, cactus };

std::string_view to_string(BoundMethod m);
// Accepts the CLI spellings: bipartite-distance, bipartite-dsl, clique, diameter, cactus.
BoundMethod parse_bound_method(std::string_view s);
MatrixKind matrix_of(BoundMethod m);

// One substructure (max-degree vertex, clique, diameter path or longest cycle)
// and the two-block quotient it induces.
//
// Every method has the shape
//     lambda_{1,2} = (tau * a +- sqrt(a^2 + 4 sigma b den)) / (2 den)
// where tau = +1 for the bipartite and cactus methods, -1 for clique and
// diameter, and sigma = +1 for the bipartite methods, -1 otherwise. So the
// quotient has trace tau a / den and determinant -sigma b / den.
struct BoundWitness {
    std::vector<int> vertices;  // witness structure (single vertex for bipartite methods)
    Int128 a = 0;
    Int128 b = 0;
    Rational weight;            // t_v for bipartite methods, s_i otherwise
    QuotientMatrix quotient;    // generic quotient of D or Q for {witness block, rest}
    double lambda1 = 0.0;       // eigenvalues of `quotient`
    double lambda2 = 0.0;
    Int128 radicand = 0;        // a^2 + 4 sigma b den
    double value = 0.0;         // sqrt(radicand) / den
    bool quotient_consistent = false;  // exact trace/det match of (a, b) with `quotient`
};

struct BoundReport {
    BoundMethod method = BoundMethod::bipartite_distance;
    int n = 0;
    int parameter = 0;          // Delta, omega, d or l
    Int128 denominator = 0;     // den in the formula above
    int trace_sign = 1;         // tau
    int radicand_sign = 1;      // sigma
    std::vector<BoundWitness> witnesses;
    double bound = 0.0;         // max witness value (or the exact closed form)
    double radius_lb = 0.0;     // max lambda1: lower bound on the spectral radius
    double min_ub = 0.0;        // min lambda2: upper bound on the least eigenvalue
    double true_spread = 0.0;
    bool witnesses_truncated = false;
    bool closed_form = false;   // degenerate case resolved exactly (star / complete graph)
    std::string closed_form_case;
};

BoundReport bound_bipartite_distance(const Graph& g);
BoundReport bound_bipartite_dsl(const Graph& g);
BoundReport bound_clique(const Graph& g);
BoundReport bound_diameter(const Graph& g, int path_cap = 10000);
BoundReport bound_cactus(const Graph& g);

BoundReport evaluate_bound(const Graph& g, BoundMethod m);

// The erroneous quotient formula of the 2012 distance-spread bound (B1)
// against the quotient computed by definition (B2) for {N[v], rest}.
struct LegacyComparison {
    int vertex = 0;
    SquareMatrix<Rational> b1;
    QuotientMatrix b2;
    bool equal = false;
};

LegacyComparison legacy_2012_counterexample(const Graph& g, int v);

std::string to_string(Int128 x);

}  // namespace spreadlab
