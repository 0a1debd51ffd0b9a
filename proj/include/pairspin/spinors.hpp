#pragma once

#include "pairspin/kinematics.hpp"
#include "pairspin/linalg.hpp"

namespace pairspin {

// Two-spinor for a spin axis at angle chi to the z-axis in the x-z plane.
struct TwoSpinor {
  Vec2C c{};
  double chi = 0.0;
};

// xi(chi) = (-i cos(chi/2), sin(chi/2))
TwoSpinor xi(double chi);

enum class SpinorKind { electron_u, positron_v };

// Dirac spinor stored as its shape times a separate real prefactor; the
// physical spinor is prefactor * shape. The prefactor is sqrt(omega/m_e)
// unless rescaled.
struct DiracSpinor {
  Vec4C shape{};
  double prefactor = 1.0;
  SpinorKind kind = SpinorKind::electron_u;
  double chi = 0.0;

  Vec4C components() const { return scale(Complex{prefactor, 0.0}, shape); }
  DiracSpinor rescaled(double factor) const {
    DiracSpinor s = *this;
    s.prefactor *= factor;
    return s;
  }
};

// Dirac adjoint as a row vector.
struct RowSpinor {
  Vec4C c{};
};

// v(p1) = sqrt(omega/m_e) (rho s1 xi1 ; xi1)
DiracSpinor v_positron(double chi1, const ProcessKinematics& kin);

// u(p2) = sqrt(omega/m_e) (xi2 ; -rho s1 xi2)
DiracSpinor u_electron(double chi2, const ProcessKinematics& kin);

// The same spinors in extended precision, with rho rebuilt from omega and
// m_e. The direct amplitude only sees 1 - rho^2 through cancellation
// between components, so it needs the extra digits at high omega.
Vec4W v_positron_wide(double chi1, const ProcessKinematics& kin);
Vec4W u_electron_wide(double chi2, const ProcessKinematics& kin);

// u^dagger gamma^0
RowSpinor ubar(const DiracSpinor& u);
RowSpinor ubar(const Vec4C& u);

// row * M * x
Complex sandwich(const RowSpinor& row, const Mat4C& m, const Vec4C& x);
Complex sandwich(const RowSpinor& row, const Vec4C& x);

}  // namespace pairspin
