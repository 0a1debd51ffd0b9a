#include "pairspin/cli/fixtures.hpp"

namespace pairspin::cli {

namespace {

FixtureRow row(std::string label, std::optional<double> omega, double chi2, double chi1p,
               double chi2p, double s, std::string text) {
  return {std::move(label), omega, {0.0, chi2, chi1p, chi2p}, s, std::move(text)};
}

std::vector<PaperFixture> build() {
  std::vector<PaperFixture> f;

  f.push_back({"Table 1", Mode::linear, "linearly polarized photons, chi1 = 0", {
      row("-", 1.05, 45, 15, 180, -1.37576, "-1.37576"),
      row("R", 1.05, 45, 30, 140, -1.36279, "-1.36279"),
      row("B", 1.05, 45, 30, 153.5, -1.35814, "-1.35814"),
      row("G", 1.05, 45, 67, 213, -1.30592, "-1.30592"),
      row("O", 1.05, 45, 90, 270, -1.03585, "-1.03585"),
      row("-", 5.00, 45, 15, 180, -1.39234, "-1.39234"),
      row("-", 10.00, 45, 15, 180, -1.39304, "-1.39304"),
      row("-", 35.00, 45, 15, 180, -1.39326, "-1.39326"),
      row("-", 46.60e3, 45, 15, 180, -1.39328, "-1.39328"),
  }});

  f.push_back({"Table 2", Mode::circular, "circularly polarized photons, chi1 = 0", {
      row("R", 1.05, 155, 15, 50, -1.32878, "-1.32878"),
      row("G", 1.05, 155, 45, 10, -1.30828, "-1.30828"),
      row("B", 1.05, 155, 85, 50, -1.05177, "-1.05177"),
      row("O", 1.05, 155, 90, 55, -1.01432, "-1.01432"),
  }});

  f.push_back({"Table 3", Mode::circular, "circularly polarized photons, fixed angles, varying energy", {
      row("-", 1.05, 155, 15, 50, -1.3287849599597406, "-1.328 784 959 959 7406"),
      row("-", 5.00, 155, 15, 50, -1.3287849599604962, "-1.328 784 959 960 4962"),
      row("-", 10.00, 155, 15, 50, -1.3287849599605301, "-1.328 784 959 960 5301"),
      row("-", 35.00, 155, 15, 50, -1.3287849599605410, "-1.328 784 959 960 5410"),
      row("-", 46.60e3, 155, 15, 50, -1.3287849599605420, "-1.328 784 959 960 5420"),
  }});

  f.push_back({"Table 5", Mode::unpolarized, "unpolarized photons, energy independent", {
      row("-", std::nullopt, 85, 25, 181, -1.14675, "-1.14675"),
      row("-", std::nullopt, 67, 55, 181, -1.34218, "-1.34218"),
      row("-", std::nullopt, 23, 45, 180, -1.46192, "-1.46192"),
  }});
  return f;
}

}  // namespace

const std::vector<PaperFixture>& paper_fixtures() {
  static const std::vector<PaperFixture> fixtures = build();
  return fixtures;
}

std::size_t fixture_row_count() {
  std::size_t n = 0;
  for (const auto& t : paper_fixtures()) n += t.rows.size();
  return n;
}

}  // namespace pairspin::cli
