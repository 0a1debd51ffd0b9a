#pragma once
//
// Clauser-Horne indicator
//
//   S = P[a1, a2] - P[a1, a2'] + P[a1', a2] + P[a1', a2'] - P[a1', -] - P[-, a2]
//
// Local hidden-variable theories require -1 <= S <= 0.
//

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pairspin/mode.hpp"
#include "pairspin/probability.hpp"

namespace pairspin {

inline constexpr double kLhvTolerance = 1e-12;

double reduce_angle(double radians);
double deg_to_rad(double degrees);
double rad_to_deg(double radians);

// Measurement angles (a1, a2, a1', a2') in radians, reduced into [0, 2pi).
class AngleQuad {
 public:
  AngleQuad() = default;
  AngleQuad(double chi1, double chi2, double chi1p, double chi2p);
  static AngleQuad from_degrees(double chi1, double chi2, double chi1p, double chi2p);
  static AngleQuad from_array(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }

  double chi1() const { return a_[0]; }
  double chi2() const { return a_[1]; }
  double chi1p() const { return a_[2]; }
  double chi2p() const { return a_[3]; }
  const std::array<double, 4>& angles() const { return a_; }
  std::array<double, 4> degrees() const;

  friend bool operator==(const AngleQuad&, const AngleQuad&) = default;

 private:
  std::array<double, 4> a_{};
};

struct STerms {
  double p11 = 0.0;  // P[a1, a2]
  double p12 = 0.0;  // P[a1, a2']
  double p21 = 0.0;  // P[a1', a2]
  double p22 = 0.0;  // P[a1', a2']
  double m1 = 0.0;   // P[a1', -]
  double m2 = 0.0;   // P[-, a2]
  bool marginal_anomaly = false;

  // +p11, -p12, +p21, +p22, -m1, -m2
  std::array<double, 6> signed_contributions() const { return {p11, -p12, p21, p22, -m1, -m2}; }
};

struct SResult {
  double s = 0.0;
  AngleQuad quad;
  double omega = 0.0;
  Mode mode = Mode::unpolarized;
  bool lhv_violated = false;
  STerms terms;
};

bool lhv_violated(double s);

SResult s_indicator(const SpinModel& model, const AngleQuad& quad);

struct AssignmentResult {
  SResult result;
  // permutation[slot] = index into the input angles; slots ordered (a1, a2, a1', a2')
  std::array<int, 4> permutation{};
};

// Every distinct placement of four angles into the four slots, sorted by S
// (then permutation).
std::vector<AssignmentResult> s_assignment_scan(const SpinModel& model,
                                                const std::array<double, 4>& angles);

enum class Objective { minimize, maximize };

struct SearchSpec {
  double step_deg = 5.0;
  double offset_deg = 0.0;
  Objective objective = Objective::minimize;
  bool refine = true;
  double refine_step_tolerance = 1e-9;  // radians
  std::size_t top_k = 10;
  unsigned jobs = 1;  // 0 = hardware concurrency
};

struct SearchOutcome {
  SResult best;       // after refinement
  SResult grid_best;  // best grid point
  std::vector<SResult> top;  // best grid points, best first
  std::size_t grid_points = 0;
};

// Grid search over [0, 360)^4 (over [0, 360)^3 with a1 pinned to the first
// grid angle when the model depends on angle differences only), followed by
// a pattern-search refinement. Ties within 1e-12 go to the lexicographically
// smallest grid quad. Results do not depend on `jobs`.
SearchOutcome minimize_s(const SpinModel& model, const SearchSpec& spec = {});

std::vector<SResult> sweep_energy(const std::function<SpinModel(double omega)>& model_at,
                                  const AngleQuad& quad, std::span<const double> omegas);

}  // namespace pairspin
