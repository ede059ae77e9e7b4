#include "spreadlab/tables.hpp"

#include <cmath>
#include <functional>

#include "spreadlab/bounds.hpp"
#include "spreadlab/error.hpp"
#include "spreadlab/spectral.hpp"

namespace spreadlab {

namespace {

constexpr double kExact = 1e-8;
constexpr double kFourDp = 5e-4;
constexpr double kOneDp = 0.05;

const char* class_of(double tol) {
    if (tol == kExact) return "exact";
    if (tol == kFourDp) return "4dp";
    return "1dp";
}

Graph row_graph(const std::string& row) {
    if (row.starts_with("kite:")) return generate(parse_family(row));
    return builtin(row);
}

}  // namespace

const std::vector<std::string>& table_names() {
    static const std::vector<std::string> names = {
        "distance-bipartite", "dsl-bipartite", "dsl-order4", "dsl-order5",
        "clique-kite",        "diameter",      "cactus",
    };
    return names;
}

std::vector<TableCell> verify_tables() {
    std::vector<TableCell> cells;
    auto add = [&](const std::string& table, const std::string& row, const std::string& column, double expected,
                   double tol, double computed) {
        TableCell c{table, row, column, expected, tol, class_of(tol), computed, false};
        c.pass = std::abs(computed - expected) <= tol;
        cells.push_back(std::move(c));
    };
    auto spreads = [&](const std::string& table, const std::string& row, double q, double q_min, double sq,
                       double tol_q, double tol_min, double tol_sq) {
        const auto r = spread(row_graph(row), MatrixKind::dsl);
        add(table, row, "q", q, tol_q, r.rho_max);
        add(table, row, "q_min", q_min, tol_min, r.rho_min);
        add(table, row, "spread", sq, tol_sq, r.spread);
    };

    for (const auto& [row, bound, sd] : {std::tuple{"G1", 15.5960, 17.6820}, std::tuple{"G2", 19.0059, 20.9674}}) {
        const Graph g = builtin(row);
        add("distance-bipartite", row, "bound", bound, kFourDp, bound_bipartite_distance(g).bound);
        add("distance-bipartite", row, "spread", sd, kFourDp, spread(g, MatrixKind::distance).spread);
    }
    for (const auto& [row, bound, sq] : {std::tuple{"G1", 15.6400, 18.6100}, std::tuple{"G2", 17.8520, 21.1870}}) {
        const Graph g = builtin(row);
        add("dsl-bipartite", row, "bound", bound, kFourDp, bound_bipartite_dsl(g).bound);
        add("dsl-bipartite", row, "spread", sq, kFourDp, spread(g, MatrixKind::dsl).spread);
    }

    spreads("dsl-order4", "K22", 8, 2, 6, kExact, kExact, kExact);
    spreads("dsl-order4", "P4", 10.6056, 2, 8.6056, kFourDp, kFourDp, kFourDp);
    spreads("dsl-order4", "S4", 9.4641, 2.5359, 6.9282, kFourDp, kFourDp, kFourDp);

    spreads("dsl-order5", "K23", 11.3723, 3, 8.3723, kFourDp, kFourDp, kFourDp);
    spreads("dsl-order5", "H1", 13.3441, 3.3113, 10.0328, kFourDp, kFourDp, kFourDp);
    spreads("dsl-order5", "H2", 15.3119, 3.6075, 11.7044, kFourDp, kFourDp, kFourDp);
    spreads("dsl-order5", "P5", 17.1152, 3.4385, 13.6767, kFourDp, kFourDp, kFourDp);
    spreads("dsl-order5", "S5", 13.4244, 3.5756, 9.8488, kFourDp, kFourDp, kFourDp);

    {
        const Graph k = kite(5, 3);
        add("clique-kite", "kite:5,3", "bound", 10.6158, kFourDp, bound_clique(k).bound);
        add("clique-kite", "kite:5,3", "spread", 11.3395, kFourDp, spread(k, MatrixKind::dsl).spread);
    }
    add("diameter", "G1", "bound", 12.1198, kFourDp, bound_diameter(builtin("G1")).bound);
    for (const auto& [row, bound, sq] : {std::tuple{"G3", 11.5, 12.8}, std::tuple{"G4", 13.4, 16.3}}) {
        const Graph g = builtin(row);
        add("cactus", row, "bound", bound, kOneDp, bound_cactus(g).bound);
        add("cactus", row, "spread", sq, kOneDp, spread(g, MatrixKind::dsl).spread);
    }
    return cells;
}

std::vector<TableCell> select_row(const std::vector<TableCell>& cells, const std::string& row,
                                  const std::string& table) {
    std::string chosen = table;
    if (chosen.empty()) {
        for (const auto& c : cells) {
            if (c.row == row) {
                chosen = c.table;
                break;
            }
        }
    }
    std::vector<TableCell> out;
    for (const auto& c : cells)
        if (c.row == row && c.table == chosen) out.push_back(c);
    if (out.empty()) throw invalid_argument("no published row '" + row + "'" + (table.empty() ? "" : " in " + table));
    return out;
}

}  // namespace spreadlab
