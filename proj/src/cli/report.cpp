#include "pairspin/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pairspin/bell.hpp"
#include "pairspin/cli/format.hpp"

namespace pairspin::cli {

DiscrepancyReport build_discrepancy_report(double m_e, const ModelOptions& options) {
  DiscrepancyReport report;
  for (const auto& table : paper_fixtures()) {
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const FixtureRow& fx = table.rows[r];
      ModelOptions o = options;
      o.mode = table.mode;
      const double omega = fx.omega_mev.value_or(kIndependentRowOmega);
      const SpinModel model = make_model(build_kinematics(omega, m_e), o);

      std::array<double, 4> rad{};
      for (std::size_t i = 0; i < 4; ++i) rad[i] = deg_to_rad(fx.angles_deg[i]);

      DiscrepancyRow row;
      row.table = table.table;
      row.row = r + 1;
      row.label = fx.label;
      row.mode = table.mode;
      row.omega_mev = fx.omega_mev;
      row.omega_used = omega;
      row.angles_deg = fx.angles_deg;
      row.expected = fx.expected_s;
      row.expected_text = fx.expected_text;
      row.canonical = s_indicator(model, AngleQuad::from_array(rad)).s;
      row.canonical_delta = std::abs(row.canonical - row.expected);

      const auto scan = s_assignment_scan(model, rad);
      const auto closest = std::min_element(scan.begin(), scan.end(), [&](const auto& a, const auto& b) {
        return std::abs(a.result.s - fx.expected_s) < std::abs(b.result.s - fx.expected_s);
      });
      row.best = closest->result.s;
      row.best_permutation = closest->permutation;
      row.best_delta = std::abs(row.best - row.expected);
      report.rows.push_back(row);
    }
  }

  auto& s = report.summary;
  s.rows = report.rows.size();
  for (const auto& row : report.rows) {
    s.max_canonical_delta = std::max(s.max_canonical_delta, row.canonical_delta);
    s.max_best_delta = std::max(s.max_best_delta, row.best_delta);
    s.mean_canonical_delta += row.canonical_delta;
    s.mean_best_delta += row.best_delta;
    s.published_violations += lhv_violated(row.expected) ? 1 : 0;
    s.computed_violations += lhv_violated(row.canonical) ? 1 : 0;
  }
  if (s.rows) {
    s.mean_canonical_delta /= static_cast<double>(s.rows);
    s.mean_best_delta /= static_cast<double>(s.rows);
  }
  return report;
}

namespace {

std::string omega_text(const DiscrepancyRow& row) {
  return row.omega_mev ? format_number(*row.omega_mev) : std::string("independent");
}

std::string permutation_text(const std::array<int, 4>& p) {
  // slot contents as indices into the published (chi1, chi2, chi1', chi2')
  static const char* names[] = {"chi1", "chi2", "chi1'", "chi2'"};
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ' ';
    s += names[p[i]];
  }
  return s;
}

}  // namespace

void write_report_text(std::ostream& os, const DiscrepancyReport& report) {
  os << "Published S values versus direct evaluation\n";
  os << "canonical: published angles in slots (a1, a2, a1', a2'); best: closest of all slot assignments\n\n";
  char line[512];
  std::snprintf(line, sizeof line, "%-8s %3s %-3s %-11s %-6s %-6s %-6s %-6s %-24s %-16s %-16s %-16s %-16s %s\n",
                "table", "row", "lbl", "omega_MeV", "chi1", "chi2", "chi1'", "chi2'", "published",
                "canonical", "|delta|", "best", "|delta|", "best slots");
  os << line;
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line,
                  "%-8s %3zu %-3s %-11s %-6s %-6s %-6s %-6s %-24s %-16s %-16s %-16s %-16s %s\n",
                  r.table.c_str(), r.row, r.label.c_str(), omega_text(r).c_str(),
                  format_number(r.angles_deg[0]).c_str(), format_number(r.angles_deg[1]).c_str(),
                  format_number(r.angles_deg[2]).c_str(), format_number(r.angles_deg[3]).c_str(),
                  r.expected_text.c_str(), format_number(r.canonical).c_str(),
                  format_number(r.canonical_delta).c_str(), format_number(r.best).c_str(),
                  format_number(r.best_delta).c_str(), permutation_text(r.best_permutation).c_str());
    os << line;
  }
  const auto& s = report.summary;
  os << "\nrows: " << s.rows << '\n';
  os << "max |delta| canonical: " << format_number(s.max_canonical_delta)
     << "   mean: " << format_number(s.mean_canonical_delta) << '\n';
  os << "max |delta| best assignment: " << format_number(s.max_best_delta)
     << "   mean: " << format_number(s.mean_best_delta) << '\n';
  os << "published rows outside [-1, 0]: " << s.published_violations << " of " << s.rows << '\n';
  os << "computed (canonical) rows outside [-1, 0]: " << s.computed_violations << " of " << s.rows
     << '\n';
}

void write_report_csv(std::ostream& os, const DiscrepancyReport& report) {
  write_csv_row(os, {"table", "row", "label", "mode", "omega_mev", "chi1_deg", "chi2_deg",
                     "chi1p_deg", "chi2p_deg", "s_published", "s_canonical", "delta_canonical",
                     "s_best", "best_slots", "delta_best"});
  for (const auto& r : report.rows) {
    std::string slots;
    for (std::size_t i = 0; i < 4; ++i) slots += std::to_string(r.best_permutation[i]);
    write_csv_row(os, {r.table, std::to_string(r.row), r.label, std::string(to_string(r.mode)),
                       omega_text(r), format_number(r.angles_deg[0]),
                       format_number(r.angles_deg[1]), format_number(r.angles_deg[2]),
                       format_number(r.angles_deg[3]), format_number(r.expected),
                       format_number(r.canonical), format_number(r.canonical_delta),
                       format_number(r.best), slots, format_number(r.best_delta)});
  }
}

}  // namespace pairspin::cli
