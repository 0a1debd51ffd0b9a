#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "pairspin/kinematics.hpp"
#include "support.hpp"

using namespace pairspin;

TEST_CASE("threshold kinematics") {
  const auto k = build_kinematics(kElectronMassMeV);
  CHECK(k.beta == 0.0);
  CHECK(k.rho == 0.0);
  CHECK(k.p1 == FourVector{kElectronMassMeV, 0, 0, 0});
}

TEST_CASE("rho squared at 1.05 MeV with m_e = 0.511") {
  const auto k = build_kinematics(1.05, 0.511);
  CHECK(k.rho * k.rho == doctest::Approx(0.345291479820627802690582959641).epsilon(1e-14));
}

TEST_CASE("invariant products") {
  testing::Draws d(11);
  for (int n = 0; n < 200; ++n) {
    const double w = d.omega();
    const auto k = build_kinematics(w);
    const double w2 = w * w;
    CHECK(minkowski_dot(k.p1, k.k1) == doctest::Approx(w2).epsilon(1e-14));
    CHECK(minkowski_dot(k.p1, k.k2) == doctest::Approx(w2).epsilon(1e-14));
    CHECK(minkowski_dot(k.k1, k.k1) == 0.0);
    CHECK(minkowski_dot(k.k1, k.k2) == doctest::Approx(2 * w2).epsilon(1e-14));
    CHECK(std::abs(minkowski_dot(k.p1, k.p1) - k.m_e * k.m_e) <= 1e-12 * w2);
    CHECK(k.k1 + k.k2 == k.p1 + k.p2);
    CHECK(std::abs(k.beta * k.beta + (k.m_e / w) * (k.m_e / w) - 1.0) <= 1e-14);
  }
}

TEST_CASE("rho increases towards 1") {
  double last = -1.0;
  for (double w = kElectronMassMeV; w < 1e6; w *= 1.7) {
    const double rho = build_kinematics(w).rho;
    CHECK(rho > last);
    CHECK(rho < 1.0);
    last = rho;
  }
  CHECK(last > 0.999999);
}

TEST_CASE("below threshold is rejected") {
  CHECK_THROWS_AS(build_kinematics(0.3), ThresholdError);
  try {
    build_kinematics(0.3);
  } catch (const ThresholdError& e) {
    CHECK(std::string(e.what()).find("1.022") != std::string::npos);
  }
  CHECK_THROWS_AS(build_kinematics(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_kinematics(NAN), std::invalid_argument);
}

TEST_CASE("linear polarization") {
  auto close = [](const PolarizationVector& p, Complex x, Complex y) {
    return std::abs(p.e[0] - x) < 1e-15 && std::abs(p.e[1] - y) < 1e-15 && p.e[2] == Complex{};
  };
  CHECK(close(linear_polarization(0.0), 1.0, 0.0));
  CHECK(close(linear_polarization(std::numbers::pi / 2), 0.0, 1.0));
  CHECK(close(linear_polarization(std::numbers::pi / 4), std::sqrt(0.5), std::sqrt(0.5)));
}

TEST_CASE("circular polarization") {
  const auto r = circular_polarization(Handedness::right);
  const auto l = circular_polarization(Handedness::left);
  const double s = std::sqrt(0.5);
  CHECK(std::abs(r.e[0] - s) < 1e-15);
  CHECK(std::abs(r.e[1] - Complex{0, s}) < 1e-15);
  CHECK(std::abs(l.e[1] - Complex{0, -s}) < 1e-15);
  CHECK(r.norm2() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("polarization vectors are unit and transverse") {
  testing::Draws d(5);
  for (int n = 0; n < 100; ++n) {
    const auto p = linear_polarization(d.angle(), n % 2 ? Photon::first : Photon::second);
    CHECK(std::abs(p.norm2() - 1.0) <= 1e-14);
    CHECK(p.e[2] == Complex{});
  }
}

TEST_CASE("four-vector embedding") {
  const auto e1 = linear_polarization(0.3, Photon::first).embed();
  const auto e2 = linear_polarization(0.3, Photon::second).embed();
  CHECK(e1[0] == Complex{});
  for (int i = 1; i < 4; ++i) CHECK(e2[i] == -e1[i]);
}

TEST_CASE("polarization basis sum") {
  const RealMat3 s = polarization_basis_sum();
  CHECK(s[0][0] == 1.0);
  CHECK(s[0][1] == 0.0);
  CHECK(s[1][1] == 1.0);
  CHECK(s[2][2] == 2.0);
}
