#include "pairspin/linalg.hpp"

#include <stdexcept>
#include <string>

namespace pairspin {

namespace {

Mat4C block(const Mat2C& ul, const Mat2C& ur, const Mat2C& ll, const Mat2C& lr) {
  Mat4C m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = ul(i, j);
      m(i, j + 2) = ur(i, j);
      m(i + 2, j) = ll(i, j);
      m(i + 2, j + 2) = lr(i, j);
    }
  return m;
}

const std::array<Mat4C, 4>& gamma_table() {
  static const std::array<Mat4C, 4> table = [] {
    const Mat2C one = Mat2C::identity();
    const Mat2C nil = Mat2C::zero();
    std::array<Mat4C, 4> g;
    g[0] = block(one, nil, nil, -1.0 * one);
    for (int k = 1; k <= 3; ++k) g[k] = block(nil, pauli(k), -1.0 * pauli(k), nil);
    return g;
  }();
  return table;
}

}  // namespace

Mat2C pauli(int k) {
  Mat2C s;
  switch (k) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      return s;
    case 2:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      return s;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      return s;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3, got " + std::to_string(k));
  }
}

Mat4C gamma(int mu) {
  if (mu < 0 || mu > 3)
    throw std::invalid_argument("gamma: index must be 0..3, got " + std::to_string(mu));
  return gamma_table()[static_cast<std::size_t>(mu)];
}

double metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

int levi_civita(int i, int j, int k) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3) return 0;
  if (i == j || j == k || i == k) return 0;
  // cyclic permutations of (1,2,3) are even
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

Mat4C slash(const FourVector& p) {
  const auto& g = gamma_table();
  Mat4C m = Complex{p.e, 0.0} * g[0];
  m -= Complex{p.x, 0.0} * g[1];
  m -= Complex{p.y, 0.0} * g[2];
  m -= Complex{p.z, 0.0} * g[3];
  return m;
}

Vec4C stack(const Vec2C& upper, const Vec2C& lower) {
  return {upper[0], upper[1], lower[0], lower[1]};
}

}  // namespace pairspin
