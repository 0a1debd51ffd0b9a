#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pairspin/mode.hpp"

namespace pairspin::cli {

// One published row: energy (nullopt where the table lists it as energy
// independent), the four angles in degrees with chi1 = 0, and the published S.
struct FixtureRow {
  std::string label;
  std::optional<double> omega_mev;
  std::array<double, 4> angles_deg{};  // (chi1, chi2, chi1', chi2')
  double expected_s = 0.0;
  std::string expected_text;  // as printed
};

struct PaperFixture {
  std::string table;
  Mode mode = Mode::linear;
  std::string note;
  std::vector<FixtureRow> rows;
};

// Published S tables for linear (1), circular (2, 3) and unpolarized (5) photons.
const std::vector<PaperFixture>& paper_fixtures();

std::size_t fixture_row_count();

}  // namespace pairspin::cli
