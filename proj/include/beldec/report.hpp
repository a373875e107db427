#pragma once

#include <string>
#include <utility>
#include <vector>

namespace beldec {

// Display rounding: half-up at `digits` decimals, matching the tables the
// tool reproduces. Values are assumed non-negative.
double round_half_up(double v, int digits);
std::string fmt_fixed(double v, int digits);

// Aligned text table: one header of column labels plus named value rows.
std::string render_table(const std::vector<std::string>& columns,
                         const std::vector<std::pair<std::string, std::vector<double>>>& rows,
                         int digits);

}  // namespace beldec
