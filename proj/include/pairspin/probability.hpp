#pragma once
//
// Normalized spin-measurement probabilities from an amplitude A(chi1, chi2)
// at fixed energy and photon preparation.
//
// The joint probability is F/N with F = |A(chi1, chi2)|^2 and N the sum of F
// over the four antipodal outcome pairs
//   (chi1, chi2), (chi1 + pi, chi2), (chi1, chi2 + pi), (chi1 + pi, chi2 + pi).
// Marginals are sums of joint probabilities over the unmeasured spin's two
// antipodal outcomes at an arbitrary reference angle.
//

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pairspin/mode.hpp"

namespace pairspin {

using AmplitudeFn = std::function<std::complex<double>(double chi1, double chi2)>;
using IntensityFn = std::function<double(double chi1, double chi2)>;
// Normalized joint probability P[chi1, chi2].
using JointFn = std::function<double(double chi1, double chi2)>;

class DegenerateNormalization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JointProbability {
  double value = 0.0;
  double chi1 = 0.0;
  double chi2 = 0.0;
  double normalization = 0.0;  // N for this antipodal family
};

struct MarginalProbability {
  double value = 0.0;
  // |difference| between the two reference-angle evaluations
  double reference_spread = 0.0;
  bool anomalous = false;
};

inline constexpr double kMarginalReferenceTolerance = 1e-10;
inline constexpr std::array<double, 2> kMarginalReferenceAngles{0.0, 1.2345};

std::array<std::pair<double, double>, 4> antipodal_pairs(double chi1, double chi2);

// N = sum of F over the four antipodal pairs.
double normalization_factor(const IntensityFn& f, double chi1, double chi2);

// Throws DegenerateNormalization if F vanishes on all four pairs.
JointProbability normalize_intensity(const IntensityFn& f, double chi1, double chi2);
JointProbability normalize(const AmplitudeFn& amp, double chi1, double chi2);

JointFn normalized_intensity(IntensityFn f);
JointFn normalized(AmplitudeFn amp);

// P[chi1, -] = P[chi1, r] + P[chi1, r + pi], evaluated at two references r.
MarginalProbability marginal_left(const JointFn& joint, double chi1);
// P[-, chi2] = P[r, chi2] + P[r + pi, chi2]
MarginalProbability marginal_right(const JointFn& joint, double chi2);

// A normalized two-spin measurement model for one photon preparation at a
// fixed energy. `difference_only` marks models whose joint probability
// depends on chi1 - chi2 alone.
struct SpinModel {
  Mode mode = Mode::unpolarized;
  double omega = 0.0;
  JointFn joint;
  bool difference_only = false;
};

std::vector<JointProbability> angle_surface(const JointFn& joint, std::span<const double> chi1s,
                                            std::span<const double> chi2s);

struct EnergyPoint {
  double omega = 0.0;
  JointProbability p;
};

std::vector<EnergyPoint> energy_surface(const std::function<JointFn(double omega)>& model_at,
                                        double chi1, double chi2,
                                        std::span<const double> omegas);

}  // namespace pairspin
