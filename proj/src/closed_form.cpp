#include "pairspin/closed_form.hpp"

#include <cmath>

#include "pairspin/spinors.hpp"

namespace pairspin {

namespace {

double sq(double x) { return x * x; }

// omega as it appears in the circular formulas
double circular_omega(const ProcessKinematics& kin, CircularUnits units) {
  return units == CircularUnits::mev ? kin.omega : kin.omega / kin.m_e;
}

}  // namespace

Complex amp_linear(const ProcessKinematics& kin, double chi1, double chi2) {
  const double r = kin.m_e / kin.omega;
  const double d = std::sin(0.5 * (chi1 - chi2));
  const double s = std::sin(0.5 * (chi1 + chi2));
  return Complex{-s / (1.0 + r), r / (1.0 + r) * d};
}

double p_linear(const ProcessKinematics& kin, double chi1, double chi2) {
  const double r2 = sq(kin.m_e / kin.omega);
  const double denom = 2.0 * (1.0 + r2);
  return r2 * sq(std::sin(0.5 * (chi1 - chi2))) / denom + sq(std::sin(0.5 * (chi1 + chi2))) / denom;
}

Complex amp_circular(const ProcessKinematics& kin, double chi1, double chi2, CircularUnits units) {
  const double w = circular_omega(kin, units);
  const double half = 0.5 * (chi1 - chi2);
  return Complex{w * std::cos(half), kin.beta * std::sin(half)};
}

double p_circular(const ProcessKinematics& kin, double chi1, double chi2, CircularUnits units) {
  const double w = circular_omega(kin, units);
  const double k = (1.0 - w * w) - sq(kin.m_e / kin.omega);
  return (w * w + k * sq(std::sin(0.5 * (chi1 - chi2)))) / (2.0 * (2.0 * w * w + k));
}

double p_unpolarized(double chi1, double chi2) { return 0.5 * sq(std::sin(0.5 * (chi1 - chi2))); }

double p_linear_asymptotic(double chi1, double chi2) {
  return 0.5 * sq(std::sin(0.5 * (chi1 + chi2)));
}

double EntangledPairState::norm2() const {
  double s = 0.0;
  for (const auto& x : c) s += std::norm(x);
  return s;
}

EntangledPairState unpolarized_state() {
  const double s = 1.0 / std::sqrt(2.0);
  EntangledPairState psi;
  psi.c[2 * 0 + 1] = s;  // |up>_2 <down|_1
  psi.c[2 * 1 + 0] = s;  // |down>_2 <up|_1
  return psi;
}

double projection_probability(const EntangledPairState& psi, double chi1, double chi2) {
  const Vec2C x1 = xi(chi1).c;
  const Vec2C x2 = xi(chi2).c;
  Complex a{};
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t p = 0; p < 2; ++p) a += std::conj(x2[e]) * psi(e, p) * x1[p];
  return std::norm(a);
}

double positron_only_probability(const EntangledPairState& psi, double chi1) {
  const Vec2C x1 = xi(chi1).c;
  double s = 0.0;
  for (std::size_t e = 0; e < 2; ++e) s += std::norm(psi(e, 0) * x1[0] + psi(e, 1) * x1[1]);
  return s;
}

double electron_only_probability(const EntangledPairState& psi, double chi2) {
  const Vec2C x2 = xi(chi2).c;
  double s = 0.0;
  for (std::size_t p = 0; p < 2; ++p)
    s += std::norm(std::conj(x2[0]) * psi(0, p) + std::conj(x2[1]) * psi(1, p));
  return s;
}

double marginals_closed_form(Mode) { return 0.5; }

}  // namespace pairspin
