#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pairspin::cli {

// 12 significant digits, %g style (scientific below 1e-4); -0 prints as 0.
std::string format_number(double x);

// The value format_number(x) denotes, so that JSON and CSV carry the same number.
double rounded(double x);

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

}  // namespace pairspin::cli
