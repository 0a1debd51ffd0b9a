#include "pairspin/spinors.hpp"

#include <cmath>
#include <utility>

namespace pairspin {

TwoSpinor xi(double chi) {
  return {{Complex{0.0, -std::cos(0.5 * chi)}, Complex{std::sin(0.5 * chi), 0.0}}, chi};
}

DiracSpinor v_positron(double chi1, const ProcessKinematics& kin) {
  const Vec2C x = xi(chi1).c;
  const Vec2C small = scale(Complex{kin.rho, 0.0}, mat_apply(pauli(1), x));
  return {stack(small, x), std::sqrt(kin.omega / kin.m_e), SpinorKind::positron_v, chi1};
}

DiracSpinor u_electron(double chi2, const ProcessKinematics& kin) {
  const Vec2C x = xi(chi2).c;
  const Vec2C small = scale(Complex{-kin.rho, 0.0}, mat_apply(pauli(1), x));
  return {stack(x, small), std::sqrt(kin.omega / kin.m_e), SpinorKind::electron_u, chi2};
}

namespace {

using CW = std::complex<Wide>;

Wide wide_rho(const ProcessKinematics& kin) {
  const Wide w = kin.omega, m = kin.m_e;
  return std::sqrt((w - m) / (w + m));
}

// xi(chi) and s1 xi(chi)
std::pair<CVec<2, Wide>, CVec<2, Wide>> wide_xi(double chi) {
  const Wide h = Wide(chi) / 2;
  const CVec<2, Wide> x{CW{0, -std::cos(h)}, CW{std::sin(h), 0}};
  return {x, {x[1], x[0]}};
}

}  // namespace

Vec4W v_positron_wide(double chi1, const ProcessKinematics& kin) {
  const Wide rho = wide_rho(kin), n = std::sqrt(Wide(kin.omega) / Wide(kin.m_e));
  const auto [x, sx] = wide_xi(chi1);
  return {n * rho * sx[0], n * rho * sx[1], n * x[0], n * x[1]};
}

Vec4W u_electron_wide(double chi2, const ProcessKinematics& kin) {
  const Wide rho = wide_rho(kin), n = std::sqrt(Wide(kin.omega) / Wide(kin.m_e));
  const auto [x, sx] = wide_xi(chi2);
  return {n * x[0], n * x[1], -n * rho * sx[0], -n * rho * sx[1]};
}

RowSpinor ubar(const Vec4C& u) {
  // gamma^0 = diag(1, 1, -1, -1)
  return {{std::conj(u[0]), std::conj(u[1]), -std::conj(u[2]), -std::conj(u[3])}};
}

RowSpinor ubar(const DiracSpinor& u) { return ubar(u.components()); }

Complex sandwich(const RowSpinor& row, const Vec4C& x) {
  Complex s{};
  for (std::size_t i = 0; i < 4; ++i) s += row.c[i] * x[i];
  return s;
}

Complex sandwich(const RowSpinor& row, const Mat4C& m, const Vec4C& x) {
  return sandwich(row, mat_apply(m, x));
}

}  // namespace pairspin
