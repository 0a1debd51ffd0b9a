#pragma once

#include <cstddef>

namespace pairspin {

// Contravariant four-vector (E; px, py, pz) in MeV.
struct FourVector {
  double e = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](std::size_t mu) const {
    switch (mu) {
      case 0: return e;
      case 1: return x;
      case 2: return y;
      default: return z;
    }
  }

  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a.e + b.e, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.e - b.e, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend FourVector operator*(double s, const FourVector& a) {
    return {s * a.e, s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const FourVector&, const FourVector&) = default;
};

// a·b with signature (+,-,-,-).
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.e * b.e - a.x * b.x - a.y * b.y - a.z * b.z;
}

}  // namespace pairspin
