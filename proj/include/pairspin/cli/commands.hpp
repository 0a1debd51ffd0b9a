#pragma once
//
// Subcommand implementations. Each writes its result to `out`, diagnostics to
// `err`, and returns the process exit code.
//

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pairspin/bell.hpp"
#include "pairspin/kinematics.hpp"
#include "pairspin/models.hpp"

namespace pairspin::cli {

inline constexpr const char* kToolName = "pairspin";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitInvalidArgs = 2, kExitKinematics = 3 };

enum class AngleUnits { degrees, radians };
enum class OutputFormat { csv, json };

struct RunConfig {
  double m_e = kElectronMassMeV;
  Mode mode = Mode::unpolarized;
  AngleUnits angle_units = AngleUnits::degrees;
  // unset: csv for tabular commands, a text report for verify-paper
  std::optional<OutputFormat> format;
  CircularUnits circular_units = CircularUnits::mev;
  unsigned jobs = 1;
  ProbabilitySource source = ProbabilitySource::closed_form;
  UnpolarizedSum unpolarized_sum = UnpolarizedSum::coherent;
  AmplitudeRoute route = AmplitudeRoute::direct;

  ModelOptions model_options() const;
  double to_radians(double angle) const;
  double from_radians(double radians) const;
};

// Energy used when an unpolarized run does not name one.
inline constexpr double kDefaultUnpolarizedOmega = 1.05;

struct ProbArgs {
  std::optional<double> omega;
  double chi1 = 0.0;
  double chi2 = 0.0;
};

struct BellArgs {
  std::optional<double> omega;
  std::array<double, 4> quad{};
};

struct ScanArgs {
  std::optional<double> omega;
  double step_deg = 5.0;
  double offset_deg = 0.0;
  Objective objective = Objective::minimize;
  bool refine = true;
  std::size_t top_k = 10;
  std::optional<std::string> top_csv;  // file for the grid top-k table
};

struct SweepArgs {
  std::array<double, 4> quad{};
  std::vector<double> omegas;  // explicit list; takes precedence over the range
  double omega_min = 1.05;
  double omega_max = 35.0;
  std::size_t points = 50;
  bool log_spacing = false;
};

struct VerifyArgs {
  std::optional<std::string> json_out;
};

struct OracleCompareArgs {
  std::optional<double> omega;
  std::size_t samples = 200;
  std::uint64_t seed = 20240101;
};

int cmd_prob(const RunConfig& config, const ProbArgs& args, std::ostream& out, std::ostream& err);
int cmd_bell(const RunConfig& config, const BellArgs& args, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, const ScanArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, const SweepArgs& args, std::ostream& out,
              std::ostream& err);
int cmd_verify_paper(const RunConfig& config, const VerifyArgs& args, std::ostream& out,
                     std::ostream& err);
int cmd_oracle_compare(const RunConfig& config, const OracleCompareArgs& args, std::ostream& out,
                       std::ostream& err);

// Sweep energies from the range fields (or the explicit list).
std::vector<double> sweep_omegas(const SweepArgs& args);

}  // namespace pairspin::cli
