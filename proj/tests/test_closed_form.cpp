#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pairspin/closed_form.hpp"
#include "pairspin/probability.hpp"
#include "support.hpp"

using namespace pairspin;

namespace {
constexpr double pi = std::numbers::pi;
double deg(double d) { return d * pi / 180.0; }
}  // namespace

TEST_CASE("amp_linear examples") {
  const auto k = build_kinematics(1.05);
  CHECK(std::abs(amp_linear(k, 0, 0)) == 0.0);
  const auto big = build_kinematics(1e9);
  testing::Draws d(31);
  for (int n = 0; n < 50; ++n) {
    const double a = d.angle(), b = d.angle();
    CHECK(std::abs(amp_linear(big, a, b) + std::sin((a + b) / 2)) < 1e-8);
  }
}

TEST_CASE("p_linear examples") {
  const auto k = build_kinematics(1.05);
  CHECK(p_linear(k, 0, pi) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p_linear(k, 0, deg(45)) ==
        doctest::Approx(0.0732233047033631188997889094738).epsilon(1e-13));
  // chi1 = 0 collapses to (1/2) sin^2(chi2/2) at every energy
  for (double w : {0.6, 1.05, 10.0, 1e4})
    CHECK(p_linear(build_kinematics(w), 0, deg(45)) ==
          doctest::Approx(0.5 * std::pow(std::sin(deg(22.5)), 2)).epsilon(1e-13));
}

TEST_CASE("amp_circular examples") {
  const auto k = build_kinematics(2.0);
  const Complex same = amp_circular(k, 0.7, 0.7);
  CHECK(same.real() == doctest::Approx(2.0));
  CHECK(same.imag() == 0.0);
  const Complex opp = amp_circular(k, 0.7 + pi, 0.7);
  CHECK(std::abs(opp.real()) < 1e-15);
  CHECK(opp.imag() == doctest::Approx(k.beta));
}

TEST_CASE("p_circular examples") {
  CHECK(p_circular(build_kinematics(1.05, 0.511), 0, deg(155)) ==
        doctest::Approx(0.208787875986566642456046428884).epsilon(1e-13));
  CHECK(p_circular(build_kinematics(1.05), 0, deg(155)) ==
        doctest::Approx(0.208788009042130416793512562898).epsilon(1e-13));
  const auto k = build_kinematics(1.05);
  const double w = k.omega, r = k.m_e / w;
  CHECK(p_circular(k, 0.3, 0.3) ==
        doctest::Approx(w * w / (2 * (2 * w * w + (1 - w * w) - r * r))).epsilon(1e-14));
}

TEST_CASE("circular units variant") {
  // omega in units of m_e
  const auto k = build_kinematics(4.0);
  const double w = k.omega / k.m_e, b2 = k.beta * k.beta;
  const double delta = 1.1, c = std::cos(delta / 2), s = std::sin(delta / 2);
  CHECK(p_circular(k, delta, 0, CircularUnits::normalized) ==
        doctest::Approx((w * w * c * c + b2 * s * s) / (2 * (w * w + b2))).epsilon(1e-13));
}

TEST_CASE("p_unpolarized and the entangled state") {
  CHECK(p_unpolarized(0.4, 0.4) == 0.0);
  CHECK(p_unpolarized(0.4 + pi, 0.4) == doctest::Approx(0.5).epsilon(1e-15));
  const auto psi = unpolarized_state();
  CHECK(psi.norm2() == doctest::Approx(1.0).epsilon(1e-15));
  testing::Draws d(32);
  for (int n = 0; n < 1000; ++n) {
    const double a = d.angle(), b = d.angle();
    CHECK(std::abs(projection_probability(psi, a, b) - p_unpolarized(a, b)) < 1e-14);
    CHECK(positron_only_probability(psi, a) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(electron_only_probability(psi, b) == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("closed-form marginals") {
  CHECK(marginals_closed_form(Mode::linear) == 0.5);
  CHECK(marginals_closed_form(Mode::circular) == 0.5);
  CHECK(marginals_closed_form(Mode::unpolarized) == 0.5);
}

TEST_CASE("amplitude to probability chains") {
  testing::Draws d(33);
  double worst_lin = 0.0, worst_cir = 0.0, worst_norm = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const auto k = build_kinematics(d.omega());
    const double a = d.angle(), b = d.angle();
    worst_lin = std::max(worst_lin, std::abs(normalize([&](double x, double y) { return amp_linear(k, x, y); }, a, b).value -
                                             p_linear(k, a, b)));
    worst_cir = std::max(worst_cir, std::abs(normalize([&](double x, double y) { return amp_circular(k, x, y); }, a, b).value -
                                             p_circular(k, a, b)));
    worst_norm = std::max(worst_norm, std::abs(normalize([&](double x, double y) {
                                                 return amp_circular(k, x, y, CircularUnits::normalized);
                                               }, a, b).value -
                                               p_circular(k, a, b, CircularUnits::normalized)));
  }
  CHECK(worst_lin <= 1e-12);
  CHECK(worst_cir <= 1e-12);
  CHECK(worst_norm <= 1e-12);
}

TEST_CASE("symmetry and range") {
  testing::Draws d(34);
  for (int n = 0; n < 1000; ++n) {
    const auto k = build_kinematics(d.omega());
    const double a = d.angle(), b = d.angle(), c = d.angle();
    CHECK(std::abs(p_linear(k, a, b) - p_linear(k, b, a)) <= 1e-15);
    CHECK(std::abs(p_circular(k, a, b) - p_circular(k, a + c, b + c)) <= 1e-12);
    CHECK(std::abs(p_circular(k, a, b) - p_circular(k, b, a)) <= 1e-12);
    CHECK(std::abs(p_unpolarized(a, b) - p_unpolarized(b, a)) <= 1e-15);
    for (double p : {p_linear(k, a, b), p_circular(k, a, b), p_unpolarized(a, b),
                     p_circular(k, a, b, CircularUnits::normalized)}) {
      CHECK(p >= -1e-15);
      CHECK(p <= 0.5 + 1e-12);
    }
  }
}

TEST_CASE("linear high-energy limit") {
  const auto k = build_kinematics(1e6);
  testing::Draws d(35);
  for (int n = 0; n < 100; ++n) {
    const double a = d.angle(), b = d.angle();
    CHECK(std::abs(p_linear(k, a, b) - p_linear_asymptotic(a, b)) <= 1e-6);
  }
}
