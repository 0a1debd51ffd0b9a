#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pairspin/cli/fixtures.hpp"
#include "pairspin/models.hpp"

namespace pairspin::cli {

// Energy at which energy-independent rows are evaluated.
inline constexpr double kIndependentRowOmega = 1.05;

struct DiscrepancyRow {
  std::string table;
  std::size_t row = 0;  // 1-based within its table
  std::string label;
  Mode mode = Mode::linear;
  std::optional<double> omega_mev;  // as published
  double omega_used = 0.0;
  std::array<double, 4> angles_deg{};
  double expected = 0.0;
  std::string expected_text;
  double canonical = 0.0;  // angles placed as published: (chi1, chi2, chi1', chi2')
  double canonical_delta = 0.0;
  double best = 0.0;       // slot assignment closest to the published value
  std::array<int, 4> best_permutation{};
  double best_delta = 0.0;
};

struct DiscrepancySummary {
  std::size_t rows = 0;
  double max_canonical_delta = 0.0;
  double mean_canonical_delta = 0.0;
  double max_best_delta = 0.0;
  double mean_best_delta = 0.0;
  std::size_t published_violations = 0;  // rows whose published S is outside [-1, 0]
  std::size_t computed_violations = 0;   // rows whose canonical S is outside [-1, 0]
};

struct DiscrepancyReport {
  std::vector<DiscrepancyRow> rows;
  DiscrepancySummary summary;
};

// `options.mode` is ignored; each table uses its own mode.
DiscrepancyReport build_discrepancy_report(double m_e, const ModelOptions& options);

void write_report_text(std::ostream& os, const DiscrepancyReport& report);
void write_report_csv(std::ostream& os, const DiscrepancyReport& report);

}  // namespace pairspin::cli
