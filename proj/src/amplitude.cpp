#include "pairspin/amplitude.hpp"

#include <cmath>
#include <cstdio>

namespace pairspin {

namespace {

Vec4C lower(const Vec4C& upper) {
  return {upper[0], -upper[1], -upper[2], -upper[3]};
}

Vec4C as_complex(const FourVector& p) {
  return {Complex{p.e, 0.0}, Complex{p.x, 0.0}, Complex{p.y, 0.0}, Complex{p.z, 0.0}};
}

PolarizationVector basis_vector(std::size_t axis, Photon photon) {
  PolarizationVector e;
  e.e[axis] = 1.0;
  e.photon = photon;
  return e;
}

std::array<Complex, 3> basis3(std::size_t axis) {
  std::array<Complex, 3> e{};
  e[axis] = 1.0;
  return e;
}

struct TwoSpinorBilinears {
  Complex scalar;  // xi2^+ xi1
  std::array<Complex, 4> sigma;  // [k] = xi2^+ s_k xi1, k = 1..3
};

TwoSpinorBilinears bilinears(double chi1, double chi2) {
  const Vec2C x1 = xi(chi1).c;
  const Vec2C x2 = xi(chi2).c;
  TwoSpinorBilinears b;
  b.scalar = inner(x2, x1);
  for (int k = 1; k <= 3; ++k) b.sigma[k] = bilinear(x2, pauli(k), x1);
  return b;
}

}  // namespace

PolarizationProduct polarization_product(const Vec4C& e1_upper, const Vec4C& e2_upper) {
  const Vec4C a = lower(e2_upper);
  const Vec4C b = lower(e1_upper);
  PolarizationProduct w{};
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) w[mu][nu] = a[mu] * b[nu];
  return w;
}

PolarizationProduct polarization_product(const PolarizationVector& e1,
                                         const PolarizationVector& e2) {
  return polarization_product(e1.embed(), e2.embed());
}

PolarizationProduct summed_polarization_product() {
  const RealMat3 t = polarization_basis_sum();
  PolarizationProduct w{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (t[i][j] == 0.0) continue;
      const auto term =
          polarization_product(basis_vector(j, Photon::first), basis_vector(i, Photon::second));
      for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu) w[mu][nu] += t[i][j] * term[mu][nu];
    }
  return w;
}

Mat4W tree_vertex(const ProcessKinematics& kin, const PolarizationProduct& w) {
  // rebuilt in extended precision from omega and m_e; see u_electron_wide
  const Wide om = kin.omega, m = kin.m_e;
  const Wide p = std::sqrt((om - m) * (om + m));
  const std::array<Wide, 4> p1{om, p, 0, 0};
  const Wide d1 = om * om;  // p1.k1
  const Wide d2 = om * om;  // p1.k2
  std::array<Mat4W, 4> g;
  for (int mu = 0; mu < 4; ++mu) g[mu] = convert<Wide>(gamma(mu));
  const Mat4W k1s = om * g[0] - om * g[3];
  const Mat4W k2s = om * g[0] + om * g[3];

  Mat4W v = Mat4W::zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const std::complex<Wide> c(w[mu][nu]);
      if (c == std::complex<Wide>{}) continue;
      const Mat4W& gm = g[mu];
      const Mat4W& gn = g[nu];
      Mat4W term = (1 / (2 * d1)) * (gm * k1s * gn);
      term += (1 / (2 * d2)) * (gn * k2s * gm);
      term += (p1[nu] / d1) * gm;
      term += (p1[mu] / d2) * gn;
      v += c * term;
    }
  return v;
}

TreeAmplitude::TreeAmplitude(const ProcessKinematics& kin, const PolarizationProduct& w,
                             double spinor_scale)
    : kin_(kin), vertex_(tree_vertex(kin, w)), spinor_scale_(spinor_scale) {}

Complex TreeAmplitude::operator()(double chi1, double chi2) const {
  const Vec4W u = u_electron_wide(chi2, kin_);
  const Vec4W v = v_positron_wide(chi1, kin_);
  const Vec4W mv = mat_apply(vertex_, v);
  // ubar = u^dagger gamma^0
  std::complex<Wide> s{};
  for (std::size_t i = 0; i < 4; ++i) s += (i < 2 ? std::conj(u[i]) : -std::conj(u[i])) * mv[i];
  const Wide scale2 = Wide(spinor_scale_) * Wide(spinor_scale_);
  return Complex(scale2 * s);
}

AmplitudeValue amplitude_direct(const AmplitudeRequest& req) {
  const TreeAmplitude amp(req.kin, polarization_product(req.e1, req.e2), req.spinor_scale);
  return {amp(req.chi1, req.chi2), AmplitudeRoute::direct};
}

Complex reduced_amplitude(const ProcessKinematics& kin, const std::array<Complex, 3>& e1,
                          const std::array<Complex, 3>& e2, double chi1, double chi2) {
  const TwoSpinorBilinears b = bilinears(chi1, chi2);
  const double rho2 = kin.rho * kin.rho;
  // k^ . (e1 x e2) with k^ = +z
  const Complex cross_z = e1[0] * e2[1] - e1[1] * e2[0];

  const Complex term1 = -kI * (1.0 - rho2) * cross_z * b.scalar;
  const Complex term2 = (1.0 - rho2) * kin.beta * (e1[0] * e2[0] + e2[0] * e1[0]) * b.sigma[1];
  const Complex term3 = (1.0 + rho2) * kin.beta * (e1[1] * e2[0] + e2[1] * e1[0]) * b.sigma[2];
  return term1 + term2 + term3;
}

AmplitudeValue amplitude_reduced(const AmplitudeRequest& req) {
  const double s2 = req.spinor_scale * req.spinor_scale;
  return {s2 * reduced_amplitude(req.kin, req.e1.e, req.e2.e, req.chi1, req.chi2),
          AmplitudeRoute::reduced};
}

AmplitudeFn definite_amplitude(const ProcessKinematics& kin, const PolarizationVector& e1,
                               const PolarizationVector& e2, AmplitudeRoute route) {
  if (route == AmplitudeRoute::direct) {
    TreeAmplitude amp(kin, polarization_product(e1, e2));
    return [amp](double a, double b) { return amp(a, b); };
  }
  return [kin, v1 = e1.e, v2 = e2.e](double a, double b) {
    return reduced_amplitude(kin, v1, v2, a, b);
  };
}

namespace {

AmplitudeFn coherent_fn(const ProcessKinematics& kin, AmplitudeRoute route) {
  if (route == AmplitudeRoute::direct) {
    TreeAmplitude amp(kin, summed_polarization_product());
    return [amp](double a, double b) { return amp(a, b); };
  }
  return [kin](double a, double b) {
    const RealMat3 t = polarization_basis_sum();
    Complex sum{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (t[i][j] != 0.0) sum += t[i][j] * reduced_amplitude(kin, basis3(j), basis3(i), a, b);
    return sum;
  };
}

IntensityFn incoherent_fn(const ProcessKinematics& kin, AmplitudeRoute route) {
  std::vector<AmplitudeFn> parts;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      parts.push_back(definite_amplitude(kin, basis_vector(a, Photon::first),
                                         basis_vector(b, Photon::second), route));
  return [parts = std::move(parts)](double c1, double c2) {
    double s = 0.0;
    for (const auto& p : parts) s += std::norm(p(c1, c2));
    return s;
  };
}

}  // namespace

Complex coherent_unpolarized_amplitude(const ProcessKinematics& kin, double chi1, double chi2,
                                       AmplitudeRoute route) {
  return coherent_fn(kin, route)(chi1, chi2);
}

double incoherent_unpolarized_intensity(const ProcessKinematics& kin, double chi1, double chi2,
                                        AmplitudeRoute route) {
  return incoherent_fn(kin, route)(chi1, chi2);
}

double coherent_unpolarized_probability(const ProcessKinematics& kin, double chi1, double chi2,
                                        AmplitudeRoute route) {
  return normalize(coherent_fn(kin, route), chi1, chi2).value;
}

double incoherent_unpolarized_probability(const ProcessKinematics& kin, double chi1, double chi2,
                                          AmplitudeRoute route) {
  return normalize_intensity(incoherent_fn(kin, route), chi1, chi2).value;
}

// ---- diagnostics ------------------------------------------------------------

std::string MatrixElementEntry::label() const {
  char buf[64];
  switch (kind) {
    case MatrixElementKind::time_sandwich:
      std::snprintf(buf, sizeof buf, "ubar g%d g0 g%d v", index[0], index[1]);
      break;
    case MatrixElementKind::vector:
      std::snprintf(buf, sizeof buf, "ubar g%d v", index[0]);
      break;
    case MatrixElementKind::space_triple:
      std::snprintf(buf, sizeof buf, "ubar g%d g%d g%d v", index[0], index[1], index[2]);
      break;
  }
  return buf;
}

std::vector<MatrixElementEntry> matrix_element_diagnostics(const ProcessKinematics& kin,
                                                           double chi1, double chi2) {
  const DiracSpinor u = u_electron(chi2, kin);
  const DiracSpinor v = v_positron(chi1, kin);
  const RowSpinor ub = ubar(u);
  const Vec4C vc = v.components();
  const TwoSpinorBilinears b = bilinears(chi1, chi2);

  const Vec2C x1 = xi(chi1).c;
  const Vec2C x2 = xi(chi2).c;
  std::array<Complex, 4> sigma_k_sigma_1{};
  for (int k = 1; k <= 3; ++k) sigma_k_sigma_1[k] = bilinear(x2, pauli(k) * pauli(1), x1);

  const double rho2 = kin.rho * kin.rho;
  const std::array<double, 4> coeff{0.0, 1.0 - rho2, 1.0 + rho2, 1.0 + rho2};
  const double floor = 1e-12 * std::max(1.0, kin.omega / kin.m_e);
  auto kd = [](int a, int c) { return a == c ? 1.0 : 0.0; };

  std::vector<MatrixElementEntry> out;
  auto keep = [&](MatrixElementEntry e) {
    if (std::abs(e.computed) > floor || std::abs(e.structure) > floor) out.push_back(e);
  };

  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Complex s{};
      for (int k = 1; k <= 3; ++k) s += 2.0 * kin.rho * kI * double(levi_civita(i, j, k)) * sigma_k_sigma_1[k];
      keep({MatrixElementKind::time_sandwich, {i, j, 0},
            sandwich(ub, gamma(i) * gamma(0) * gamma(j), vc), s});
    }

  for (int i = 1; i <= 3; ++i)
    keep({MatrixElementKind::vector, {i, 0, 0}, sandwich(ub, gamma(i), vc),
          coeff[i] * b.sigma[i]});

  for (int i = 1; i <= 3; ++i)
    for (int m = 1; m <= 3; ++m)
      for (int j = 1; j <= 3; ++j) {
        Complex s{};
        for (int a = 1; a <= 3; ++a)
          s += (-kd(m, j) * kd(i, a) - kd(m, i) * kd(j, a) + kd(j, i) * kd(m, a)) * coeff[a] *
               b.sigma[a];
        s -= kI * (1.0 - rho2) * double(levi_civita(m, j, i)) * b.scalar;
        keep({MatrixElementKind::space_triple, {i, m, j},
              sandwich(ub, gamma(i) * gamma(m) * gamma(j), vc), s});
      }
  return out;
}

double gauge_shift_residual(const AmplitudeRequest& req, double lambda) {
  const Vec4C e1 = req.e1.embed();
  const Vec4C e2 = req.e2.embed();
  const Vec4C k1 = as_complex(req.kin.k1);
  const Vec4C k2 = as_complex(req.kin.k2);
  auto shifted = [&](const Vec4C& e, const Vec4C& k) {
    Vec4C s = e;
    for (std::size_t mu = 0; mu < 4; ++mu) s[mu] += lambda * k[mu];
    return s;
  };
  auto eval = [&](const Vec4C& a, const Vec4C& b) {
    return TreeAmplitude(req.kin, polarization_product(a, b), req.spinor_scale)(req.chi1, req.chi2);
  };
  const Complex base = eval(e1, e2);
  const double d1 = std::abs(eval(shifted(e1, k1), e2) - base);
  const double d2 = std::abs(eval(e1, shifted(e2, k2)) - base);
  const double scale = std::abs(base) > 0.0 ? std::abs(base) : 1.0;
  return std::max(d1, d2) / scale;
}

}  // namespace pairspin
