#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "pairspin/four_vector.hpp"
#include "pairspin/linalg.hpp"

namespace pairspin {

// Electron mass in MeV used when none is configured.
inline constexpr double kElectronMassMeV = 0.510999;

// Raised when the photon energy is below pair-production threshold.
class ThresholdError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Center-of-mass kinematics of gamma(k1) gamma(k2) -> e+(p1) e-(p2).
// Photons travel along +z / -z, the positron leaves along +x and the
// electron along -x.
struct ProcessKinematics {
  double omega = 0.0;  // photon energy, MeV
  double m_e = 0.0;    // lepton mass, MeV
  double beta = 0.0;   // lepton speed sqrt(1 - (m_e/omega)^2)
  double rho = 0.0;    // sqrt((omega - m_e)/(omega + m_e))
  FourVector k1, k2, p1, p2;
};

// Throws ThresholdError if omega < m_e, std::invalid_argument if m_e <= 0
// or either input is not finite.
ProcessKinematics build_kinematics(double omega, double m_e = kElectronMassMeV);

enum class Photon { first, second };

enum class Handedness { right, left };

// Spatial polarization vector of one photon. Components are stored exactly
// as written for the photon; the second photon's four-vector embedding
// carries the minus sign, e2^mu = (0, -e2).
struct PolarizationVector {
  std::array<Complex, 3> e{};
  Photon photon = Photon::first;

  // Contravariant four-vector embedding.
  Vec4C embed() const;
  double norm2() const;
};

// (cos phi, sin phi, 0)
PolarizationVector linear_polarization(double phi, Photon photon = Photon::first);

// right -> (1, i, 0)/sqrt2, left -> (1, -i, 0)/sqrt2
PolarizationVector circular_polarization(Handedness h, Photon photon = Photon::first);

using RealMat3 = std::array<std::array<double, 3>, 3>;

// sum_pol e2^i e1^j = delta^{ij} - n2^i n1^j with n1 = +z, n2 = -z.
RealMat3 polarization_basis_sum();

std::string threshold_message(double omega, double m_e);

}  // namespace pairspin
