#pragma once

#include <map>
#include <string>
#include <vector>

#include "eps/merton.hpp"

namespace eps {

// One cell of a regenerated reference table, joined against the bundled
// reference CSV. `checked` cells participate in the pass/fail gate; the rest
// are reported with residuals only.
struct TableCell {
    std::string table;
    std::string block;
    int row = 0;
    std::string column;
    double model = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool checked = false;
    bool pass = true;
};

struct TableReport {
    std::vector<TableCell> cells;
    bool all_pass = true;
    // Compensator convention chosen per table (by asserted-cell residual).
    std::map<std::string, CompensatorMode> table_modes;
};

// Computes every cell of the four reference tables under the given
// compensator convention. Keys match the bundled reference CSV.
std::vector<TableCell> model_table_cells(CompensatorMode mode);

// Joins model cells with the reference CSV (columns table,block,row,column,
// value,tolerance,check) and evaluates the per-cell gates under the given
// compensator convention.
TableReport reproduce_tables(const std::string& reference_csv_path, CompensatorMode mode);

// Same join, but each table is evaluated under whichever compensator
// convention minimizes its summed asserted-cell residual; the chosen modes
// are recorded in the report.
TableReport reproduce_tables(const std::string& reference_csv_path);

// Sum of |model - reference| over the full-series columns of the option
// table, used when reporting which compensator convention matches.
double table1_series_residual(const std::string& reference_csv_path, CompensatorMode mode);

std::string to_csv(const TableReport& report);

}  // namespace eps
