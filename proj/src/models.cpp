#include "pairspin/models.hpp"

#include <numbers>
#include <stdexcept>

#include "pairspin/closed_form.hpp"

namespace pairspin {

std::pair<PolarizationVector, PolarizationVector> mode_polarizations(Mode mode) {
  constexpr double quarter = std::numbers::pi / 4.0;
  switch (mode) {
    case Mode::linear:
      // e1 = (1,1,0)/sqrt2, e2 = -e1
      return {linear_polarization(quarter, Photon::first),
              linear_polarization(quarter + std::numbers::pi, Photon::second)};
    case Mode::circular:
      return {circular_polarization(Handedness::right, Photon::first),
              circular_polarization(Handedness::left, Photon::second)};
    case Mode::unpolarized:
      break;
  }
  throw std::invalid_argument("mode_polarizations: unpolarized mode has no definite polarization");
}

namespace {

JointFn closed_form_joint(const ProcessKinematics& kin, const ModelOptions& o) {
  switch (o.mode) {
    case Mode::linear:
      return [kin](double a, double b) { return p_linear(kin, a, b); };
    case Mode::circular:
      return [kin, u = o.circular_units](double a, double b) { return p_circular(kin, a, b, u); };
    case Mode::unpolarized:
      return [](double a, double b) { return p_unpolarized(a, b); };
  }
  return {};
}

JointFn oracle_joint(const ProcessKinematics& kin, const ModelOptions& o) {
  if (o.mode != Mode::unpolarized) {
    const auto [e1, e2] = mode_polarizations(o.mode);
    return normalized(definite_amplitude(kin, e1, e2, o.route));
  }
  if (o.unpolarized_sum == UnpolarizedSum::coherent)
    return [kin, r = o.route](double a, double b) {
      return coherent_unpolarized_probability(kin, a, b, r);
    };
  return [kin, r = o.route](double a, double b) {
    return incoherent_unpolarized_probability(kin, a, b, r);
  };
}

}  // namespace

SpinModel make_model(const ProcessKinematics& kin, const ModelOptions& options) {
  SpinModel m;
  m.mode = options.mode;
  m.omega = kin.omega;
  m.joint = options.source == ProbabilitySource::closed_form ? closed_form_joint(kin, options)
                                                              : oracle_joint(kin, options);
  m.difference_only =
      options.mode == Mode::circular ||
      (options.mode == Mode::unpolarized &&
       (options.source == ProbabilitySource::closed_form ||
        options.unpolarized_sum == UnpolarizedSum::coherent));
  return m;
}

}  // namespace pairspin
