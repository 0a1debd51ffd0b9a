#pragma once
//
// Fixed-size dense complex linear algebra: 2- and 4-component vectors,
// 2x2 and 4x4 matrices, Pauli and Dirac matrices.
//
// Conventions
//   metric  g = diag(+1, -1, -1, -1)
//   epsilon_{123} = +1
//   Dirac (standard) representation:
//
//            | 1   0 |            |  0     s_k |
//     g^0 =  |       |     g^k =  |            |
//            | 0  -1 |            | -s_k   0   |
//
//   with s_k the Pauli matrices
//     s_1 = [[0, 1], [1, 0]]   s_2 = [[0, -i], [i, 0]]   s_3 = [[1, 0], [0, -1]]
//

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>

#include "pairspin/four_vector.hpp"

namespace pairspin {

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};

// Extended precision for evaluations that cancel badly in double.
using Wide = long double;

template <std::size_t N, class T = double>
using CVec = std::array<std::complex<T>, N>;

using Vec2C = CVec<2>;
using Vec4C = CVec<4>;
using Vec4W = CVec<4, Wide>;

template <std::size_t N, class T = double>
struct CMat {
  using value_type = std::complex<T>;
  std::array<value_type, N * N> a{};

  value_type& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

  static CMat zero() { return {}; }
  static CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1);
    return m;
  }

  CMat& operator+=(const CMat& o) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] += o.a[i];
    return *this;
  }
  CMat& operator-=(const CMat& o) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] -= o.a[i];
    return *this;
  }
  CMat& operator*=(value_type s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend CMat operator+(CMat l, const CMat& r) { return l += r; }
  friend CMat operator-(CMat l, const CMat& r) { return l -= r; }
  friend CMat operator*(value_type s, CMat m) { return m *= s; }
  friend CMat operator*(CMat m, value_type s) { return m *= s; }
  friend CMat operator*(T s, CMat m) { return m *= value_type{s, T(0)}; }
  friend bool operator==(const CMat&, const CMat&) = default;

  friend CMat operator*(const CMat& l, const CMat& r) { return mat_mul(l, r); }
  friend CVec<N, T> operator*(const CMat& m, const CVec<N, T>& x) { return mat_apply(m, x); }

  static CMat mat_mul(const CMat& l, const CMat& r) {
    CMat out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const value_type lik = l(i, k);
        if (lik == value_type{}) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += lik * r(k, j);
      }
    return out;
  }

  static CVec<N, T> mat_apply(const CMat& m, const CVec<N, T>& x) {
    CVec<N, T> out{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out[i] += m(i, j) * x[j];
    return out;
  }
};

using Mat2C = CMat<2>;
using Mat4C = CMat<4>;
using Mat4W = CMat<4, Wide>;

template <std::size_t N, class T>
CMat<N, T> mat_mul(const CMat<N, T>& l, const CMat<N, T>& r) {
  return CMat<N, T>::mat_mul(l, r);
}

template <std::size_t N, class T>
CVec<N, T> mat_apply(const CMat<N, T>& m, const CVec<N, T>& x) {
  return CMat<N, T>::mat_apply(m, x);
}

template <class U, std::size_t N, class T>
CMat<N, U> convert(const CMat<N, T>& m) {
  CMat<N, U> out;
  for (std::size_t i = 0; i < N * N; ++i) out.a[i] = std::complex<U>(m.a[i]);
  return out;
}

template <std::size_t N, class T>
CMat<N, T> adjoint(const CMat<N, T>& m) {
  CMat<N, T> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

template <std::size_t N, class T>
std::complex<T> trace(const CMat<N, T>& m) {
  std::complex<T> t{};
  for (std::size_t i = 0; i < N; ++i) t += m(i, i);
  return t;
}

// <x, y> = x^dagger y
template <std::size_t N, class T>
std::complex<T> inner(const CVec<N, T>& x, const CVec<N, T>& y) {
  std::complex<T> s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

template <std::size_t N, class T>
T norm2(const CVec<N, T>& x) {
  T s = 0;
  for (const auto& c : x) s += std::norm(c);
  return s;
}

// w^dagger M x
template <std::size_t N, class T>
std::complex<T> bilinear(const CVec<N, T>& w, const CMat<N, T>& m, const CVec<N, T>& x) {
  return inner(w, mat_apply(m, x));
}

template <std::size_t N, class T>
CVec<N, T> scale(std::complex<T> s, CVec<N, T> x) {
  for (auto& c : x) c *= s;
  return x;
}

template <std::size_t N, class T>
double max_abs_diff(const CMat<N, T>& l, const CMat<N, T>& r) {
  double d = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) d = std::max(d, double(std::abs(l.a[i] - r.a[i])));
  return d;
}

template <std::size_t N, class T>
double max_abs_entry(const CMat<N, T>& m) {
  double d = 0.0;
  for (const auto& c : m.a) d = std::max(d, double(std::abs(c)));
  return d;
}

template <std::size_t N, class T>
double max_abs(const CVec<N, T>& x) {
  double d = 0.0;
  for (const auto& c : x) d = std::max(d, double(std::abs(c)));
  return d;
}

// Pauli matrix sigma_k, k in {1, 2, 3}. Throws std::invalid_argument otherwise.
Mat2C pauli(int k);

// gamma^mu in the Dirac representation, mu in {0, 1, 2, 3}.
Mat4C gamma(int mu);

// g^{mu nu}; diagonal (+1, -1, -1, -1).
double metric(int mu, int nu);

// epsilon_{ijk} with 1-based indices, epsilon_{123} = +1; 0 for repeated or
// out-of-range indices.
int levi_civita(int i, int j, int k);

// gamma^mu p_mu = g^0 p^0 - g.p
Mat4C slash(const FourVector& p);

// Upper and lower two-component blocks stacked into a Dirac 4-spinor.
Vec4C stack(const Vec2C& upper, const Vec2C& lower);

}  // namespace pairspin
