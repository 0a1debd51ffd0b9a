#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "pairspin/kinematics.hpp"

namespace pairspin::testing {

// Seeded draws shared by the property tests.
class Draws {
 public:
  explicit Draws(std::uint64_t seed = 12345) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }
  // log-uniform on [m_e, hi], endpoint excluded
  double omega(double hi = 1e5, double m_e = kElectronMassMeV) {
    return m_e * std::exp(uniform(1e-9, std::log(hi / m_e)));
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pairspin::testing
