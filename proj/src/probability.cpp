#include "pairspin/probability.hpp"

#include <cmath>
#include <numbers>

namespace pairspin {

std::array<std::pair<double, double>, 4> antipodal_pairs(double chi1, double chi2) {
  constexpr double pi = std::numbers::pi;
  return {{{chi1, chi2}, {chi1 + pi, chi2}, {chi1, chi2 + pi}, {chi1 + pi, chi2 + pi}}};
}

double normalization_factor(const IntensityFn& f, double chi1, double chi2) {
  double n = 0.0;
  for (const auto& [a, b] : antipodal_pairs(chi1, chi2)) n += f(a, b);
  return n;
}

JointProbability normalize_intensity(const IntensityFn& f, double chi1, double chi2) {
  const double here = f(chi1, chi2);
  const double n = normalization_factor(f, chi1, chi2);
  if (!(n > 0.0))
    throw DegenerateNormalization("normalization vanishes: |A|^2 is zero on all four antipodal pairs");
  return {here / n, chi1, chi2, n};
}

JointProbability normalize(const AmplitudeFn& amp, double chi1, double chi2) {
  return normalize_intensity([&](double a, double b) { return std::norm(amp(a, b)); }, chi1, chi2);
}

JointFn normalized_intensity(IntensityFn f) {
  return [f = std::move(f)](double a, double b) { return normalize_intensity(f, a, b).value; };
}

JointFn normalized(AmplitudeFn amp) {
  return [amp = std::move(amp)](double a, double b) { return normalize(amp, a, b).value; };
}

namespace {

template <typename Sum>
MarginalProbability checked_marginal(Sum&& at_reference) {
  const double first = at_reference(kMarginalReferenceAngles[0]);
  const double second = at_reference(kMarginalReferenceAngles[1]);
  const double spread = std::abs(first - second);
  return {first, spread, !(spread <= kMarginalReferenceTolerance)};
}

}  // namespace

MarginalProbability marginal_left(const JointFn& joint, double chi1) {
  return checked_marginal(
      [&](double r) { return joint(chi1, r) + joint(chi1, r + std::numbers::pi); });
}

MarginalProbability marginal_right(const JointFn& joint, double chi2) {
  return checked_marginal(
      [&](double r) { return joint(r, chi2) + joint(r + std::numbers::pi, chi2); });
}

std::vector<JointProbability> angle_surface(const JointFn& joint, std::span<const double> chi1s,
                                            std::span<const double> chi2s) {
  std::vector<JointProbability> out;
  out.reserve(chi1s.size() * chi2s.size());
  for (double a : chi1s)
    for (double b : chi2s) out.push_back({joint(a, b), a, b, 0.0});
  return out;
}

std::vector<EnergyPoint> energy_surface(const std::function<JointFn(double)>& model_at,
                                        double chi1, double chi2,
                                        std::span<const double> omegas) {
  std::vector<EnergyPoint> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    const JointFn joint = model_at(w);
    out.push_back({w, {joint(chi1, chi2), chi1, chi2, 0.0}});
  }
  return out;
}

}  // namespace pairspin
