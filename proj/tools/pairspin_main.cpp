#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pairspin/cli/commands.hpp"

using namespace pairspin;
using namespace pairspin::cli;

int main(int argc, char** argv) {
  CLI::App app{"Spin correlations and the Clauser-Horne indicator for photon-photon pair production"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig config;
  std::string mode_name = "unpolarized";
  bool degrees = false, radians = false;
  std::optional<std::string> format_name;

  app.add_option("--m-e", config.m_e, "electron mass in MeV")->capture_default_str();
  app.add_option("--mode", mode_name, "linear | circular | unpolarized")
      ->check(CLI::IsMember({"linear", "circular", "unpolarized"}))
      ->capture_default_str();
  auto* deg = app.add_flag("--degrees", degrees, "angles in degrees (default)");
  app.add_flag("--radians", radians, "angles in radians")->excludes(deg);
  app.add_option("--format", format_name, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string circular_units = "mev", source = "closed-form", unpolarized_sum = "coherent",
              route = "direct";
  app.add_option("--circular-units", circular_units, "mev | normalized")
      ->check(CLI::IsMember({"mev", "normalized"}))
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "worker threads for grid scans (0 = all cores)")
      ->capture_default_str();
  app.add_option("--source", source, "closed-form | oracle")
      ->check(CLI::IsMember({"closed-form", "oracle"}))
      ->capture_default_str();
  app.add_option("--unpolarized-sum", unpolarized_sum, "coherent | incoherent")
      ->check(CLI::IsMember({"coherent", "incoherent"}))
      ->capture_default_str();
  app.add_option("--route", route, "direct | reduced amplitude evaluation")
      ->check(CLI::IsMember({"direct", "reduced"}))
      ->capture_default_str();

  // prob
  ProbArgs prob;
  auto* prob_cmd = app.add_subcommand("prob", "joint and marginal probabilities at one angle pair");
  prob_cmd->fallthrough();
  prob_cmd->add_option("--omega", prob.omega, "photon energy in MeV");
  prob_cmd->add_option("--chi1", prob.chi1, "positron measurement angle")->required();
  prob_cmd->add_option("--chi2", prob.chi2, "electron measurement angle")->required();

  // bell
  BellArgs bell;
  auto* bell_cmd = app.add_subcommand("bell", "indicator S for one angle quad");
  bell_cmd->fallthrough();
  bell_cmd->add_option("--omega", bell.omega, "photon energy in MeV");
  bell_cmd->add_option("--chi1", bell.quad[0])->required();
  bell_cmd->add_option("--chi2", bell.quad[1])->required();
  bell_cmd->add_option("--chi1p", bell.quad[2])->required();
  bell_cmd->add_option("--chi2p", bell.quad[3])->required();

  // scan
  ScanArgs scan;
  bool maximize = false, no_refine = false;
  std::string top_csv;
  auto* scan_cmd = app.add_subcommand("scan", "grid search plus refinement for extreme S");
  scan_cmd->fallthrough();
  scan_cmd->add_option("--omega", scan.omega, "photon energy in MeV");
  scan_cmd->add_option("--step", scan.step_deg, "grid step in degrees")->capture_default_str();
  scan_cmd->add_option("--offset", scan.offset_deg, "grid offset in degrees")->capture_default_str();
  scan_cmd->add_flag("--maximize", maximize, "search for the largest S");
  scan_cmd->add_flag("--no-refine", no_refine, "report the grid optimum only");
  scan_cmd->add_option("--top-k", scan.top_k, "rows in the top-k table")->capture_default_str();
  scan_cmd->add_option("--top-csv", top_csv, "write the grid top-k table to this file");

  // sweep
  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "S and its terms as a function of energy");
  sweep_cmd->fallthrough();
  sweep_cmd->add_option("--chi1", sweep.quad[0])->required();
  sweep_cmd->add_option("--chi2", sweep.quad[1])->required();
  sweep_cmd->add_option("--chi1p", sweep.quad[2])->required();
  sweep_cmd->add_option("--chi2p", sweep.quad[3])->required();
  sweep_cmd->add_option("--omegas", sweep.omegas, "explicit energies in MeV")->delimiter(',');
  sweep_cmd->add_option("--omega-min", sweep.omega_min)->capture_default_str();
  sweep_cmd->add_option("--omega-max", sweep.omega_max)->capture_default_str();
  sweep_cmd->add_option("--points", sweep.points)->capture_default_str();
  sweep_cmd->add_flag("--log", sweep.log_spacing, "logarithmic energy spacing");

  // verify-paper
  VerifyArgs verify;
  std::string json_out;
  auto* verify_cmd =
      app.add_subcommand("verify-paper", "recompute the published S tables and report deltas");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--json-out", json_out, "also write the JSON report to this file");

  // oracle-compare
  OracleCompareArgs compare;
  auto* compare_cmd = app.add_subcommand(
      "oracle-compare", "closed-form versus numerical-amplitude probabilities at random angles");
  compare_cmd->fallthrough();
  compare_cmd->add_option("--omega", compare.omega, "photon energy in MeV");
  compare_cmd->add_option("--samples", compare.samples)->capture_default_str();
  compare_cmd->add_option("--seed", compare.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidArgs;
  }

  config.mode = *parse_mode(mode_name);
  config.circular_units =
      circular_units == "normalized" ? CircularUnits::normalized : CircularUnits::mev;
  config.source = source == "oracle" ? ProbabilitySource::oracle : ProbabilitySource::closed_form;
  config.unpolarized_sum =
      unpolarized_sum == "incoherent" ? UnpolarizedSum::incoherent : UnpolarizedSum::coherent;
  config.route = route == "reduced" ? AmplitudeRoute::reduced : AmplitudeRoute::direct;
  config.angle_units = radians ? AngleUnits::radians : AngleUnits::degrees;
  if (format_name) config.format = *format_name == "json" ? OutputFormat::json : OutputFormat::csv;
  scan.objective = maximize ? Objective::maximize : Objective::minimize;
  scan.refine = !no_refine;
  if (!top_csv.empty()) scan.top_csv = top_csv;
  if (!json_out.empty()) verify.json_out = json_out;

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*prob_cmd) return cmd_prob(config, prob, out, err);
  if (*bell_cmd) return cmd_bell(config, bell, out, err);
  if (*scan_cmd) return cmd_scan(config, scan, out, err);
  if (*sweep_cmd) return cmd_sweep(config, sweep, out, err);
  if (*verify_cmd) return cmd_verify_paper(config, verify, out, err);
  if (*compare_cmd) return cmd_oracle_compare(config, compare, out, err);
  return kExitInvalidArgs;
}
