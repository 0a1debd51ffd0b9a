#include "pairspin/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "pairspin/cli/format.hpp"
#include "pairspin/cli/report.hpp"
#include "pairspin/closed_form.hpp"

namespace pairspin::cli {

using nlohmann::ordered_json;

ModelOptions RunConfig::model_options() const {
  ModelOptions o;
  o.mode = mode;
  o.circular_units = circular_units;
  o.source = source;
  o.unpolarized_sum = unpolarized_sum;
  o.route = route;
  return o;
}

double RunConfig::to_radians(double angle) const {
  return angle_units == AngleUnits::degrees ? deg_to_rad(angle) : angle;
}

double RunConfig::from_radians(double radians) const {
  return angle_units == AngleUnits::degrees ? rad_to_deg(radians) : radians;
}

namespace {

const char* to_string(ProbabilitySource s) {
  return s == ProbabilitySource::closed_form ? "closed-form" : "oracle";
}
const char* to_string(UnpolarizedSum s) {
  return s == UnpolarizedSum::coherent ? "coherent" : "incoherent";
}
const char* to_string(AngleUnits u) { return u == AngleUnits::degrees ? "degrees" : "radians"; }
const char* to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

bool json_output(const RunConfig& c) { return c.format == OutputFormat::json; }

ordered_json envelope(const RunConfig& c, const char* command) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = command;
  ordered_json cfg;
  cfg["m_e"] = rounded(c.m_e);
  cfg["mode"] = std::string(pairspin::to_string(c.mode));
  cfg["angle_units"] = to_string(c.angle_units);
  cfg["format"] = c.format ? to_string(*c.format) : "default";
  cfg["circular_units"] = std::string(pairspin::to_string(c.circular_units));
  cfg["jobs"] = c.jobs;
  cfg["source"] = to_string(c.source);
  cfg["unpolarized_sum"] = to_string(c.unpolarized_sum);
  cfg["route"] = std::string(pairspin::to_string(c.route));
  j["config"] = cfg;
  j["results"] = ordered_json::array();
  return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string num(double x) { return format_number(x); }

// Energy for a run: required for the polarized modes.
double resolve_omega(const RunConfig& c, const std::optional<double>& omega) {
  if (omega) return *omega;
  if (c.mode == Mode::unpolarized) return kDefaultUnpolarizedOmega;
  throw std::invalid_argument("--omega is required for " + std::string(pairspin::to_string(c.mode)) +
                              " mode");
}

SpinModel model_at(const RunConfig& c, double omega) {
  return make_model(build_kinematics(omega, c.m_e), c.model_options());
}

AngleQuad quad_from_input(const RunConfig& c, const std::array<double, 4>& q) {
  return AngleQuad(c.to_radians(q[0]), c.to_radians(q[1]), c.to_radians(q[2]),
                   c.to_radians(q[3]));
}

void validate(const RunConfig& c) {
  if (!(c.m_e > 0.0) || !std::isfinite(c.m_e)) throw std::invalid_argument("--m-e must be > 0");
}

// Runs `body`, mapping library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ThresholdError& e) {
    err << "error: " << e.what() << '\n';
    return kExitKinematics;
  } catch (const DegenerateNormalization& e) {
    err << "error: " << e.what() << '\n';
    return kExitKinematics;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitKinematics;
  }
}

ordered_json quad_json(const RunConfig& c, const AngleQuad& q) {
  return ordered_json{{"chi1", rounded(c.from_radians(q.chi1()))},
                      {"chi2", rounded(c.from_radians(q.chi2()))},
                      {"chi1p", rounded(c.from_radians(q.chi1p()))},
                      {"chi2p", rounded(c.from_radians(q.chi2p()))}};
}

ordered_json terms_json(const STerms& t) {
  return ordered_json{{"p11", rounded(t.p11)}, {"p12", rounded(t.p12)}, {"p21", rounded(t.p21)},
                      {"p22", rounded(t.p22)}, {"m1", rounded(t.m1)},   {"m2", rounded(t.m2)}};
}

ordered_json sresult_json(const RunConfig& c, const SResult& r) {
  ordered_json j;
  j["mode"] = std::string(pairspin::to_string(r.mode));
  j["omega_mev"] = rounded(r.omega);
  j["quad"] = quad_json(c, r.quad);
  j["s"] = rounded(r.s);
  j["lhv_violated"] = r.lhv_violated;
  j["terms"] = terms_json(r.terms);
  j["marginal_anomaly"] = r.terms.marginal_anomaly;
  return j;
}

std::vector<std::string> quad_fields(const RunConfig& c, const AngleQuad& q) {
  return {num(c.from_radians(q.chi1())), num(c.from_radians(q.chi2())),
          num(c.from_radians(q.chi1p())), num(c.from_radians(q.chi2p()))};
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

// ---- prob -------------------------------------------------------------------

int cmd_prob(const RunConfig& config, const ProbArgs& args, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const double omega = resolve_omega(config, args.omega);
    const SpinModel model = model_at(config, omega);
    const double a = config.to_radians(args.chi1);
    const double b = config.to_radians(args.chi2);

    const double joint = model.joint(a, b);
    const MarginalProbability left = marginal_left(model.joint, a);
    const MarginalProbability right = marginal_right(model.joint, b);
    double antipodal = 0.0;
    for (const auto& [x, y] : antipodal_pairs(a, b)) antipodal += model.joint(x, y);

    if (json_output(config)) {
      ordered_json j = envelope(config, "prob");
      ordered_json r;
      r["mode"] = std::string(pairspin::to_string(config.mode));
      r["omega_mev"] = rounded(omega);
      r["chi1"] = rounded(args.chi1);
      r["chi2"] = rounded(args.chi2);
      r["joint"] = rounded(joint);
      r["marginal_left"] = rounded(left.value);
      r["marginal_right"] = rounded(right.value);
      r["antipodal_sum"] = rounded(antipodal);
      r["marginal_anomaly"] = left.anomalous || right.anomalous;
      j["results"].push_back(r);
      emit(out, j);
    } else {
      write_csv_row(out, {"mode", "omega_mev", "chi1", "chi2", "joint", "marginal_left",
                          "marginal_right", "antipodal_sum", "marginal_anomaly"});
      write_csv_row(out, {std::string(pairspin::to_string(config.mode)), num(omega),
                          num(args.chi1), num(args.chi2), num(joint), num(left.value),
                          num(right.value), num(antipodal),
                          flag(left.anomalous || right.anomalous)});
    }
    return int(kExitOk);
  });
}

// ---- bell -------------------------------------------------------------------

int cmd_bell(const RunConfig& config, const BellArgs& args, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const double omega = resolve_omega(config, args.omega);
    const SResult r = s_indicator(model_at(config, omega), quad_from_input(config, args.quad));

    if (json_output(config)) {
      ordered_json j = envelope(config, "bell");
      j["results"].push_back(sresult_json(config, r));
      emit(out, j);
    } else {
      write_csv_row(out, {"mode", "omega_mev", "chi1", "chi2", "chi1p", "chi2p", "s", "p11",
                          "p12", "p21", "p22", "m1", "m2", "lhv_violated"});
      std::vector<std::string> row{std::string(pairspin::to_string(r.mode)), num(r.omega)};
      for (auto& f : quad_fields(config, r.quad)) row.push_back(f);
      for (double v : {r.s, r.terms.p11, r.terms.p12, r.terms.p21, r.terms.p22, r.terms.m1,
                       r.terms.m2})
        row.push_back(num(v));
      row.push_back(flag(r.lhv_violated));
      write_csv_row(out, row);
    }
    return int(kExitOk);
  });
}

// ---- scan -------------------------------------------------------------------

int cmd_scan(const RunConfig& config, const ScanArgs& args, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    if (!(args.step_deg > 0.0) || args.step_deg > 360.0)
      throw std::invalid_argument("--step must be in (0, 360] degrees");
    const double omega = resolve_omega(config, args.omega);

    SearchSpec spec;
    spec.step_deg = args.step_deg;
    spec.offset_deg = args.offset_deg;
    spec.objective = args.objective;
    spec.refine = args.refine;
    spec.top_k = args.top_k;
    spec.jobs = config.jobs;
    const SearchOutcome o = minimize_s(model_at(config, omega), spec);

    if (args.top_csv) {
      std::ofstream f(*args.top_csv, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot write " + *args.top_csv);
      write_csv_row(f, {"rank", "s", "chi1", "chi2", "chi1p", "chi2p", "lhv_violated"});
      for (std::size_t i = 0; i < o.top.size(); ++i) {
        std::vector<std::string> row{std::to_string(i + 1), num(o.top[i].s)};
        for (auto& x : quad_fields(config, o.top[i].quad)) row.push_back(x);
        row.push_back(flag(o.top[i].lhv_violated));
        write_csv_row(f, row);
      }
    }

    if (json_output(config)) {
      ordered_json j = envelope(config, "scan");
      ordered_json best = sresult_json(config, o.best);
      best["kind"] = "refined";
      ordered_json grid = sresult_json(config, o.grid_best);
      grid["kind"] = "grid";
      j["results"].push_back(best);
      j["results"].push_back(grid);
      j["grid_points"] = o.grid_points;
      ordered_json top = ordered_json::array();
      for (const auto& r : o.top) top.push_back(sresult_json(config, r));
      j["top"] = top;
      emit(out, j);
    } else {
      write_csv_row(out, {"kind", "mode", "omega_mev", "s", "chi1", "chi2", "chi1p", "chi2p",
                          "lhv_violated", "grid_points"});
      for (const auto* r : {&o.best, &o.grid_best}) {
        std::vector<std::string> row{r == &o.best ? "refined" : "grid",
                                     std::string(pairspin::to_string(r->mode)), num(r->omega),
                                     num(r->s)};
        for (auto& x : quad_fields(config, r->quad)) row.push_back(x);
        row.push_back(flag(r->lhv_violated));
        row.push_back(std::to_string(o.grid_points));
        write_csv_row(out, row);
      }
    }
    return int(kExitOk);
  });
}

// ---- sweep ------------------------------------------------------------------

std::vector<double> sweep_omegas(const SweepArgs& args) {
  if (!args.omegas.empty()) return args.omegas;
  if (args.points == 0) throw std::invalid_argument("--points must be positive");
  if (!(args.omega_max >= args.omega_min))
    throw std::invalid_argument("--omega-max must be >= --omega-min");
  if (args.log_spacing && !(args.omega_min > 0.0))
    throw std::invalid_argument("log spacing needs --omega-min > 0");
  std::vector<double> w(args.points);
  if (args.points == 1) {
    w[0] = args.omega_min;
    return w;
  }
  const double n = static_cast<double>(args.points - 1);
  for (std::size_t i = 0; i < args.points; ++i) {
    const double t = static_cast<double>(i) / n;
    w[i] = args.log_spacing
               ? args.omega_min * std::pow(args.omega_max / args.omega_min, t)
               : args.omega_min + (args.omega_max - args.omega_min) * t;
  }
  w.back() = args.omega_max;
  return w;
}

int cmd_sweep(const RunConfig& config, const SweepArgs& args, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const std::vector<double> omegas = sweep_omegas(args);
    const AngleQuad quad = quad_from_input(config, args.quad);
    const auto series =
        sweep_energy([&](double w) { return model_at(config, w); }, quad, omegas);

    if (json_output(config)) {
      ordered_json j = envelope(config, "sweep");
      j["quad"] = quad_json(config, quad);
      for (const auto& r : series) {
        ordered_json row{{"omega_mev", rounded(r.omega)}, {"s", rounded(r.s)}};
        for (auto& [k, v] : terms_json(r.terms).items()) row[k] = v;
        row["lhv_violated"] = r.lhv_violated;
        j["results"].push_back(row);
      }
      emit(out, j);
    } else {
      write_csv_row(out, {"omega_mev", "s", "p11", "p12", "p21", "p22", "m1", "m2"});
      for (const auto& r : series)
        write_csv_row(out, {num(r.omega), num(r.s), num(r.terms.p11), num(r.terms.p12),
                            num(r.terms.p21), num(r.terms.p22), num(r.terms.m1),
                            num(r.terms.m2)});
    }
    return int(kExitOk);
  });
}

// ---- verify-paper -----------------------------------------------------------

namespace {

ordered_json report_json(const RunConfig& config, const DiscrepancyReport& report) {
  ordered_json j = envelope(config, "verify-paper");
  for (const auto& r : report.rows) {
    ordered_json row;
    row["table"] = r.table;
    row["row"] = r.row;
    row["label"] = r.label;
    row["mode"] = std::string(pairspin::to_string(r.mode));
    row["omega_mev"] = r.omega_mev ? ordered_json(rounded(*r.omega_mev)) : ordered_json("independent");
    row["omega_evaluated_mev"] = rounded(r.omega_used);
    row["angles_deg"] = ordered_json::array();
    for (double a : r.angles_deg) row["angles_deg"].push_back(rounded(a));
    row["s_published"] = r.expected;
    row["s_published_text"] = r.expected_text;
    row["s_canonical"] = rounded(r.canonical);
    row["delta_canonical"] = rounded(r.canonical_delta);
    row["s_best"] = rounded(r.best);
    row["best_slots"] = r.best_permutation;
    row["delta_best"] = rounded(r.best_delta);
    j["results"].push_back(row);
  }
  const auto& s = report.summary;
  j["summary"] = ordered_json{{"rows", s.rows},
                              {"max_delta_canonical", rounded(s.max_canonical_delta)},
                              {"mean_delta_canonical", rounded(s.mean_canonical_delta)},
                              {"max_delta_best", rounded(s.max_best_delta)},
                              {"mean_delta_best", rounded(s.mean_best_delta)},
                              {"published_outside_lhv", s.published_violations},
                              {"computed_outside_lhv", s.computed_violations}};
  return j;
}

}  // namespace

int cmd_verify_paper(const RunConfig& config, const VerifyArgs& args, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const DiscrepancyReport report = build_discrepancy_report(config.m_e, config.model_options());
    if (args.json_out) {
      std::ofstream f(*args.json_out, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot write " + *args.json_out);
      emit(f, report_json(config, report));
    }
    if (!config.format)
      write_report_text(out, report);
    else if (*config.format == OutputFormat::csv)
      write_report_csv(out, report);
    else
      emit(out, report_json(config, report));
    return int(kExitOk);
  });
}

// ---- oracle-compare ---------------------------------------------------------

int cmd_oracle_compare(const RunConfig& config, const OracleCompareArgs& args, std::ostream& out,
                       std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    if (args.samples == 0) throw std::invalid_argument("--samples must be positive");
    const double omega = resolve_omega(config, args.omega);
    const ProcessKinematics kin = build_kinematics(omega, config.m_e);

    ModelOptions closed = config.model_options();
    closed.source = ProbabilitySource::closed_form;
    ModelOptions oracle = config.model_options();
    oracle.source = ProbabilitySource::oracle;
    const SpinModel mc = make_model(kin, closed);
    const SpinModel mo = make_model(kin, oracle);

    std::mt19937_64 gen(args.seed);
    auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

    struct Sample {
      double chi1_deg, chi2_deg, closed, oracle;
    };
    std::vector<Sample> samples;
    samples.reserve(args.samples);
    double sab = 0.0, sbb = 0.0, max_delta = 0.0;
    for (std::size_t i = 0; i < args.samples; ++i) {
      const double d1 = 360.0 * uniform();
      const double d2 = 360.0 * uniform();
      const double pc = mc.joint(deg_to_rad(d1), deg_to_rad(d2));
      const double po = mo.joint(deg_to_rad(d1), deg_to_rad(d2));
      samples.push_back({d1, d2, pc, po});
      sab += pc * po;
      sbb += po * po;
      max_delta = std::max(max_delta, std::abs(pc - po));
    }
    // least-squares c in p_closed = c p_oracle
    const double c = sbb > 0.0 ? sab / sbb : 0.0;
    double residual = 0.0;
    for (const auto& s : samples) residual = std::max(residual, std::abs(s.closed - c * s.oracle));

    if (json_output(config)) {
      ordered_json j = envelope(config, "oracle-compare");
      for (const auto& s : samples)
        j["results"].push_back(ordered_json{{"chi1_deg", rounded(s.chi1_deg)},
                                            {"chi2_deg", rounded(s.chi2_deg)},
                                            {"p_closed", rounded(s.closed)},
                                            {"p_oracle", rounded(s.oracle)},
                                            {"delta", rounded(std::abs(s.closed - s.oracle))}});
      j["summary"] = ordered_json{{"omega_mev", rounded(omega)},
                                  {"samples", args.samples},
                                  {"seed", args.seed},
                                  {"max_delta", rounded(max_delta)},
                                  {"proportionality_constant", rounded(c)},
                                  {"fit_residual", rounded(residual)}};
      emit(out, j);
    } else {
      write_csv_row(out, {"chi1_deg", "chi2_deg", "p_closed", "p_oracle", "delta"});
      for (const auto& s : samples)
        write_csv_row(out, {num(s.chi1_deg), num(s.chi2_deg), num(s.closed), num(s.oracle),
                            num(std::abs(s.closed - s.oracle))});
      err << "omega_mev=" << num(omega) << " samples=" << args.samples
          << " max_delta=" << num(max_delta) << " proportionality_constant=" << num(c)
          << " fit_residual=" << num(residual) << '\n';
    }
    return int(kExitOk);
  });
}

}  // namespace pairspin::cli
