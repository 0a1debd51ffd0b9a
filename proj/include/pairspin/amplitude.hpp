#pragma once
//
// Tree-level gamma gamma -> e+ e- amplitude evaluated numerically from Dirac
// spinors and gamma matrices, the reduced two-spinor form of the same
// amplitude, and matrix-element diagnostics comparing the two.
//
// Only ratios of |A|^2 are physical here; every amplitude carries an
// arbitrary overall scale.
//

#include <array>
#include <string>
#include <vector>

#include "pairspin/kinematics.hpp"
#include "pairspin/linalg.hpp"
#include "pairspin/probability.hpp"
#include "pairspin/spinors.hpp"

namespace pairspin {

enum class AmplitudeRoute { direct, reduced };

inline std::string_view to_string(AmplitudeRoute r) {
  return r == AmplitudeRoute::direct ? "direct" : "reduced";
}

struct AmplitudeRequest {
  ProcessKinematics kin;
  PolarizationVector e1;
  PolarizationVector e2;
  double chi1 = 0.0;
  double chi2 = 0.0;
  // multiplies the sqrt(omega/m_e) prefactor of both spinors
  double spinor_scale = 1.0;
};

struct AmplitudeValue {
  Complex value;
  AmplitudeRoute provenance = AmplitudeRoute::direct;
};

// W_{mu nu} = (e2)_mu (e1)_nu, lower indices, built from the four-vector
// embeddings of the two photon polarizations.
using PolarizationProduct = std::array<std::array<Complex, 4>, 4>;

PolarizationProduct polarization_product(const Vec4C& e1_upper, const Vec4C& e2_upper);
PolarizationProduct polarization_product(const PolarizationVector& e1,
                                         const PolarizationVector& e2);

// Coherent sum over photon polarizations: e2^i e1^j of the stored vectors
// replaced by polarization_basis_sum(), then embedded.
PolarizationProduct summed_polarization_product();

// The bracket of the tree amplitude contracted with W:
//   sum_{mu nu} W_{mu nu} [ g^mu k1/ g^nu / (2 p1.k1) + g^nu k2/ g^mu / (2 p1.k2)
//                          + g^mu p1^nu / (p1.k1) + g^nu p1^mu / (p1.k2) ]
Mat4W tree_vertex(const ProcessKinematics& kin, const PolarizationProduct& w);

// ubar(p2, chi2) V v(p1, chi1) with the vertex V cached.
class TreeAmplitude {
 public:
  TreeAmplitude(const ProcessKinematics& kin, const PolarizationProduct& w,
                double spinor_scale = 1.0);

  Complex operator()(double chi1, double chi2) const;
  const Mat4W& vertex() const { return vertex_; }

 private:
  ProcessKinematics kin_;
  Mat4W vertex_;
  double spinor_scale_;
};

AmplitudeValue amplitude_direct(const AmplitudeRequest& req);

// Reduced form with the three two-spinor structures xi2^+ xi1, xi2^+ s1 xi1,
// xi2^+ s2 xi1. The s1 term keeps its symmetrized polarization factor
// (e1^(1) e2^(1) + e2^(1) e1^(1)) as written.
AmplitudeValue amplitude_reduced(const AmplitudeRequest& req);

Complex reduced_amplitude(const ProcessKinematics& kin, const std::array<Complex, 3>& e1,
                          const std::array<Complex, 3>& e2, double chi1, double chi2);

// Amplitude with the photon polarizations summed coherently.
Complex coherent_unpolarized_amplitude(const ProcessKinematics& kin, double chi1, double chi2,
                                       AmplitudeRoute route = AmplitudeRoute::direct);

// sum over the four definite (x, y) x (x, y) polarization configurations of |A|^2
double incoherent_unpolarized_intensity(const ProcessKinematics& kin, double chi1, double chi2,
                                        AmplitudeRoute route = AmplitudeRoute::direct);

// Throw DegenerateNormalization at omega == m_e, where the coherent sum vanishes.
double coherent_unpolarized_probability(const ProcessKinematics& kin, double chi1, double chi2,
                                        AmplitudeRoute route = AmplitudeRoute::direct);
double incoherent_unpolarized_probability(const ProcessKinematics& kin, double chi1, double chi2,
                                          AmplitudeRoute route = AmplitudeRoute::direct);

// Amplitude function at fixed kinematics for a definite photon preparation.
AmplitudeFn definite_amplitude(const ProcessKinematics& kin, const PolarizationVector& e1,
                               const PolarizationVector& e2,
                               AmplitudeRoute route = AmplitudeRoute::direct);

// ---- matrix-element diagnostics ---------------------------------------------

enum class MatrixElementKind {
  time_sandwich,   // ubar g^i g^0 g^j v
  vector,          // ubar g^i v
  space_triple,    // ubar g^i g^m g^j v
};

struct MatrixElementEntry {
  MatrixElementKind kind;
  std::array<int, 3> index{};  // (i, j, 0) / (i, 0, 0) / (i, m, j), 1-based
  Complex computed;            // from gamma matrices and Dirac spinors
  Complex structure;           // the two-spinor structure it is proportional to

  std::string label() const;
};

// Only entries where either side is nonzero (|.| > 1e-12 * omega/m_e) are kept.
std::vector<MatrixElementEntry> matrix_element_diagnostics(const ProcessKinematics& kin,
                                                           double chi1, double chi2);

// Max |A(e + lambda k) - A(e)| / |A(e)| over shifting either photon's
// polarization along its momentum.
double gauge_shift_residual(const AmplitudeRequest& req, double lambda);

}  // namespace pairspin
