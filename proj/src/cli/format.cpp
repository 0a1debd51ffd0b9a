#include "pairspin/cli/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace pairspin::cli {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double rounded(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

}  // namespace pairspin::cli
