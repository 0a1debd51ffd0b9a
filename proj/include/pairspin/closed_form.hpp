#pragma once
//
// Closed-form amplitudes and joint probabilities for the three photon
// preparations, written out independently of the numerical amplitude.
//
// Linear mode fixes both polarization planes at pi/4 to the x-axis
// (e1 = (1, 1, 0)/sqrt2 = -e2). Circular mode pairs a right-handed photon 1
// with a left-handed photon 2. In the circular formulas omega enters both as
// an energy in MeV and in the dimensionless combination 1 - omega^2; the
// `mev` variant uses omega verbatim, `normalized` uses omega / m_e there.
//

#include <array>

#include "pairspin/kinematics.hpp"
#include "pairspin/linalg.hpp"
#include "pairspin/mode.hpp"

namespace pairspin {

// i (m/w)/(1 + m/w) sin((chi1 - chi2)/2) - 1/(1 + m/w) sin((chi1 + chi2)/2)
Complex amp_linear(const ProcessKinematics& kin, double chi1, double chi2);

double p_linear(const ProcessKinematics& kin, double chi1, double chi2);

// omega cos((chi1 - chi2)/2) + i beta sin((chi1 - chi2)/2)
Complex amp_circular(const ProcessKinematics& kin, double chi1, double chi2,
                     CircularUnits units = CircularUnits::mev);

double p_circular(const ProcessKinematics& kin, double chi1, double chi2,
                  CircularUnits units = CircularUnits::mev);

// (1/2) sin^2((chi1 - chi2)/2), independent of energy
double p_unpolarized(double chi1, double chi2);

// Two-spin state written as |a>_electron <b|_positron; coefficients
// c[2a + b] over the product basis.
struct EntangledPairState {
  std::array<Complex, 4> c{};

  Complex operator()(std::size_t electron, std::size_t positron) const {
    return c[2 * electron + positron];
  }
  double norm2() const;
};

// (|up>_2 <down|_1 + |down>_2 <up|_1) / sqrt2
EntangledPairState unpolarized_state();

// |xi(chi2)^+ psi xi(chi1)|^2
double projection_probability(const EntangledPairState& psi, double chi1, double chi2);

// |psi xi(chi1)|^2 (positron measured only)
double positron_only_probability(const EntangledPairState& psi, double chi1);

// |xi(chi2)^+ psi|^2 (electron measured only)
double electron_only_probability(const EntangledPairState& psi, double chi2);

// 1/2 for every mode
double marginals_closed_form(Mode mode);

// Linear-mode joint probability in the omega -> infinity limit.
double p_linear_asymptotic(double chi1, double chi2);

}  // namespace pairspin
