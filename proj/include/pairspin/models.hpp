#pragma once

#include <utility>

#include "pairspin/amplitude.hpp"
#include "pairspin/kinematics.hpp"
#include "pairspin/mode.hpp"
#include "pairspin/probability.hpp"

namespace pairspin {

// closed_form: joint probabilities from the closed-form expressions.
// oracle: joint probabilities from the numerical amplitude, normalized by the
// antipodal-pair procedure.
enum class ProbabilitySource { closed_form, oracle };

enum class UnpolarizedSum { coherent, incoherent };

struct ModelOptions {
  Mode mode = Mode::unpolarized;
  CircularUnits circular_units = CircularUnits::mev;
  ProbabilitySource source = ProbabilitySource::closed_form;
  UnpolarizedSum unpolarized_sum = UnpolarizedSum::coherent;
  AmplitudeRoute route = AmplitudeRoute::direct;
};

// Photon polarizations of the linear and circular preparations.
std::pair<PolarizationVector, PolarizationVector> mode_polarizations(Mode mode);

SpinModel make_model(const ProcessKinematics& kin, const ModelOptions& options);

}  // namespace pairspin
