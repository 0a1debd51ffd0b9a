#include "pairspin/kinematics.hpp"

#include <cmath>
#include <cstdio>

namespace pairspin {

std::string threshold_message(double omega, double m_e) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "photon energy omega = %.6g MeV is below pair-production threshold: "
                "need omega >= m_e = %.6g MeV, i.e. 2*omega >= %.6g MeV total",
                omega, m_e, 2.0 * m_e);
  return buf;
}

ProcessKinematics build_kinematics(double omega, double m_e) {
  if (!std::isfinite(omega) || !std::isfinite(m_e))
    throw std::invalid_argument("build_kinematics: omega and m_e must be finite");
  if (m_e <= 0.0) throw std::invalid_argument("build_kinematics: m_e must be positive");
  if (omega < m_e) throw ThresholdError(threshold_message(omega, m_e));

  ProcessKinematics kin;
  kin.omega = omega;
  kin.m_e = m_e;
  const double r = m_e / omega;
  kin.beta = std::sqrt((1.0 - r) * (1.0 + r));
  kin.rho = std::sqrt((omega - m_e) / (omega + m_e));

  const double p = omega * kin.beta;
  kin.k1 = {omega, 0.0, 0.0, omega};
  kin.k2 = {omega, 0.0, 0.0, -omega};
  kin.p1 = {omega, p, 0.0, 0.0};
  kin.p2 = {omega, -p, 0.0, 0.0};
  return kin;
}

Vec4C PolarizationVector::embed() const {
  const double sign = photon == Photon::first ? 1.0 : -1.0;
  return {Complex{}, sign * e[0], sign * e[1], sign * e[2]};
}

double PolarizationVector::norm2() const {
  return std::norm(e[0]) + std::norm(e[1]) + std::norm(e[2]);
}

PolarizationVector linear_polarization(double phi, Photon photon) {
  return {{Complex{std::cos(phi), 0.0}, Complex{std::sin(phi), 0.0}, Complex{}}, photon};
}

PolarizationVector circular_polarization(Handedness h, Photon photon) {
  const double s = 1.0 / std::sqrt(2.0);
  const double sign = h == Handedness::right ? 1.0 : -1.0;
  return {{Complex{s, 0.0}, Complex{0.0, sign * s}, Complex{}}, photon};
}

RealMat3 polarization_basis_sum() {
  constexpr std::array<double, 3> n1{0.0, 0.0, 1.0};
  constexpr std::array<double, 3> n2{0.0, 0.0, -1.0};
  RealMat3 t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = (i == j ? 1.0 : 0.0) - n2[i] * n1[j];
  return t;
}

}  // namespace pairspin
