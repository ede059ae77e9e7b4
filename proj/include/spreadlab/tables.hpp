#pragma once

#include <string>
#include <vector>

namespace spreadlab {

// One published numeric value, recomputed.
struct TableCell {
    std::string table;      // e.g. "distance-bipartite"
    std::string row;        // graph name
    std::string column;     // "bound", "spread", "q", "q_min"
    double expected = 0.0;
    double tolerance = 0.0;
    std::string tolerance_class;  // "exact" (1e-8), "4dp" (5e-4), "1dp" (0.05)
    double computed = 0.0;
    bool pass = false;
};

// Tables in the order they are reported.
const std::vector<std::string>& table_names();

// Recomputes every cell.
std::vector<TableCell> verify_tables();

// Cells of one row. Without `table`, the first table listing `row` is used.
std::vector<TableCell> select_row(const std::vector<TableCell>& cells, const std::string& row,
                                  const std::string& table = {});

}  // namespace spreadlab
