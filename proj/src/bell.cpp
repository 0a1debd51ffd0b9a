#include "pairspin/bell.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>

namespace pairspin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTieTolerance = 1e-12;

}  // namespace

double reduce_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double deg_to_rad(double degrees) { return degrees * (std::numbers::pi / 180.0); }
double rad_to_deg(double radians) { return radians * (180.0 / std::numbers::pi); }

AngleQuad::AngleQuad(double chi1, double chi2, double chi1p, double chi2p) {
  const std::array<double, 4> in{chi1, chi2, chi1p, chi2p};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!std::isfinite(in[i])) throw std::invalid_argument("AngleQuad: angles must be finite");
    a_[i] = reduce_angle(in[i]);
  }
}

AngleQuad AngleQuad::from_degrees(double chi1, double chi2, double chi1p, double chi2p) {
  return {deg_to_rad(chi1), deg_to_rad(chi2), deg_to_rad(chi1p), deg_to_rad(chi2p)};
}

std::array<double, 4> AngleQuad::degrees() const {
  return {rad_to_deg(a_[0]), rad_to_deg(a_[1]), rad_to_deg(a_[2]), rad_to_deg(a_[3])};
}

bool lhv_violated(double s) { return s < -1.0 - kLhvTolerance || s > kLhvTolerance; }

SResult s_indicator(const SpinModel& model, const AngleQuad& quad) {
  const auto& j = model.joint;
  STerms t;
  t.p11 = j(quad.chi1(), quad.chi2());
  t.p12 = j(quad.chi1(), quad.chi2p());
  t.p21 = j(quad.chi1p(), quad.chi2());
  t.p22 = j(quad.chi1p(), quad.chi2p());
  const MarginalProbability m1 = marginal_left(j, quad.chi1p());
  const MarginalProbability m2 = marginal_right(j, quad.chi2());
  t.m1 = m1.value;
  t.m2 = m2.value;
  t.marginal_anomaly = m1.anomalous || m2.anomalous;

  SResult r;
  r.s = t.p11 - t.p12 + t.p21 + t.p22 - t.m1 - t.m2;
  r.quad = quad;
  r.omega = model.omega;
  r.mode = model.mode;
  r.lhv_violated = lhv_violated(r.s);
  r.terms = t;
  return r;
}

std::vector<AssignmentResult> s_assignment_scan(const SpinModel& model,
                                                const std::array<double, 4>& angles) {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::vector<AssignmentResult> out;
  std::vector<std::array<double, 4>> seen;
  do {
    const std::array<double, 4> slots{angles[perm[0]], angles[perm[1]], angles[perm[2]],
                                       angles[perm[3]]};
    if (std::find(seen.begin(), seen.end(), slots) != seen.end()) continue;
    seen.push_back(slots);
    out.push_back({s_indicator(model, AngleQuad::from_array(slots)), perm});
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::stable_sort(out.begin(), out.end(), [](const AssignmentResult& a, const AssignmentResult& b) {
    return a.result.s < b.result.s;
  });
  return out;
}

// ---- grid search -------------------------------------------------------------

namespace {

struct GridIndex {
  std::array<std::uint32_t, 4> i{};  // (a1, a2, a1', a2') grid indices
  friend bool operator<(const GridIndex& a, const GridIndex& b) { return a.i < b.i; }
};

struct Candidate {
  double value;  // objective: S for minimize, -S for maximize
  GridIndex idx;
  friend bool operator<(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.idx < b.idx;
  }
};

class GridTable {
 public:
  GridTable(const SpinModel& model, const SearchSpec& spec) {
    if (!(spec.step_deg > 0.0) || spec.step_deg > 360.0)
      throw std::invalid_argument("minimize_s: grid step must be in (0, 360] degrees");
    n_ = static_cast<std::size_t>(std::ceil(360.0 / spec.step_deg - 1e-9));
    angle_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k)
      angle_[k] = reduce_angle(deg_to_rad(spec.offset_deg + static_cast<double>(k) * spec.step_deg));
    joint_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) joint_[a * n_ + b] = model.joint(angle_[a], angle_[b]);
    left_.resize(n_);
    right_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      left_[k] = marginal_left(model.joint, angle_[k]).value;
      right_[k] = marginal_right(model.joint, angle_[k]).value;
    }
    sign_ = spec.objective == Objective::minimize ? 1.0 : -1.0;
    slices_i1_ = model.difference_only ? 1 : n_;
  }

  std::size_t n() const { return n_; }
  std::size_t slices() const { return slices_i1_ * n_; }
  double angle(std::size_t k) const { return angle_[k]; }

  // Visit every (a1', a2') for the slice (a1, a2) = split(slice), in
  // lexicographic order; `visit` returns false to stop.
  template <typename Visit>
  void for_each_in_slice(std::size_t slice, Visit&& visit) const {
    const std::size_t i1 = slice / n_;
    const std::size_t i2 = slice % n_;
    const double* row_i1 = &joint_[i1 * n_];
    const double base = joint_[i1 * n_ + i2] - right_[i2];
    for (std::size_t j1 = 0; j1 < n_; ++j1) {
      const double* row_j1 = &joint_[j1 * n_];
      const double a = base + joint_[j1 * n_ + i2] - left_[j1];
      for (std::size_t j2 = 0; j2 < n_; ++j2) {
        const double s = a - row_i1[j2] + row_j1[j2];
        if (!visit(sign_ * s, GridIndex{{std::uint32_t(i1), std::uint32_t(i2), std::uint32_t(j1),
                                          std::uint32_t(j2)}}))
          return;
      }
    }
  }

  AngleQuad quad(const GridIndex& g) const {
    return {angle_[g.i[0]], angle_[g.i[1]], angle_[g.i[2]], angle_[g.i[3]]};
  }

 private:
  std::size_t n_ = 0;
  std::size_t slices_i1_ = 0;
  double sign_ = 1.0;
  std::vector<double> angle_;
  std::vector<double> joint_;
  std::vector<double> left_;
  std::vector<double> right_;
};

template <typename Work>
void parallel_for(std::size_t count, unsigned jobs, Work&& work) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
}

struct SliceSummary {
  double min = std::numeric_limits<double>::infinity();
  std::vector<Candidate> top;  // max-heap by Candidate ordering
};

// Hooke-Jeeves pattern search on the free coordinates.
std::array<double, 4> pattern_search(const std::function<double(const std::array<double, 4>&)>& f,
                                     std::array<double, 4> x, double& fx, double step,
                                     double tolerance, std::size_t first_free) {
  auto explore = [&](std::array<double, 4> base, double& fbase) {
    for (std::size_t c = first_free; c < 4; ++c) {
      for (double dir : {1.0, -1.0}) {
        std::array<double, 4> trial = base;
        trial[c] += dir * step;
        const double ft = f(trial);
        if (ft < fbase) {
          base = trial;
          fbase = ft;
          break;
        }
      }
    }
    return base;
  };

  std::size_t guard = 0;
  while (step >= tolerance && guard++ < 200000) {
    double fnew = fx;
    std::array<double, 4> xnew = explore(x, fnew);
    if (fnew < fx) {
      // pattern moves while they keep paying off
      while (true) {
        std::array<double, 4> pattern;
        for (std::size_t c = 0; c < 4; ++c) pattern[c] = 2.0 * xnew[c] - x[c];
        x = xnew;
        fx = fnew;
        double fp = f(pattern);
        const std::array<double, 4> xp = explore(pattern, fp);
        if (fp < fx) {
          xnew = xp;
          fnew = fp;
        } else {
          break;
        }
      }
    } else {
      step *= 0.5;
    }
  }
  return x;
}

}  // namespace

SearchOutcome minimize_s(const SpinModel& model, const SearchSpec& spec) {
  const GridTable table(model, spec);
  const std::size_t slices = table.slices();
  const std::size_t k = std::max<std::size_t>(1, spec.top_k);

  std::vector<SliceSummary> summary(slices);
  parallel_for(slices, spec.jobs, [&](std::size_t s) {
    SliceSummary& out = summary[s];
    out.top.reserve(k + 1);
    table.for_each_in_slice(s, [&](double v, const GridIndex& g) {
      out.min = std::min(out.min, v);
      const Candidate c{v, g};
      if (out.top.size() < k) {
        out.top.push_back(c);
        std::push_heap(out.top.begin(), out.top.end());
      } else if (c < out.top.front()) {
        std::pop_heap(out.top.begin(), out.top.end());
        out.top.back() = c;
        std::push_heap(out.top.begin(), out.top.end());
      }
      return true;
    });
  });

  double global_min = std::numeric_limits<double>::infinity();
  std::vector<Candidate> top;
  for (const auto& s : summary) {
    global_min = std::min(global_min, s.min);
    top.insert(top.end(), s.top.begin(), s.top.end());
  }
  std::sort(top.begin(), top.end());
  if (top.size() > k) top.resize(k);

  // lexicographically first grid point within the tie tolerance of the minimum
  std::vector<std::optional<GridIndex>> first(slices);
  parallel_for(slices, spec.jobs, [&](std::size_t s) {
    if (summary[s].min > global_min + kTieTolerance) return;
    table.for_each_in_slice(s, [&](double v, const GridIndex& g) {
      if (v <= global_min + kTieTolerance) {
        first[s] = g;
        return false;
      }
      return true;
    });
  });
  GridIndex chosen;
  for (const auto& f : first)
    if (f) {
      chosen = *f;
      break;
    }

  SearchOutcome outcome;
  outcome.grid_points = slices * table.n() * table.n();
  outcome.grid_best = s_indicator(model, table.quad(chosen));
  for (const auto& c : top) outcome.top.push_back(s_indicator(model, table.quad(c.idx)));
  // grid sums round differently from s_indicator; order by the reported values
  std::stable_sort(outcome.top.begin(), outcome.top.end(), [&](const SResult& a, const SResult& b) {
    return spec.objective == Objective::minimize ? a.s < b.s : a.s > b.s;
  });
  outcome.best = outcome.grid_best;

  if (spec.refine) {
    const double sign = spec.objective == Objective::minimize ? 1.0 : -1.0;
    auto objective = [&](const std::array<double, 4>& a) {
      return sign * s_indicator(model, AngleQuad::from_array(a)).s;
    };
    std::array<double, 4> x = outcome.grid_best.quad.angles();
    double fx = objective(x);
    const double step0 = 0.5 * deg_to_rad(spec.step_deg);
    x = pattern_search(objective, x, fx, step0, spec.refine_step_tolerance,
                       model.difference_only ? 1 : 0);
    const SResult refined = s_indicator(model, AngleQuad::from_array(x));
    // keep the grid quad unless refinement is better beyond rounding
    if (sign * refined.s < sign * outcome.grid_best.s - kLhvTolerance) outcome.best = refined;
  }
  return outcome;
}

std::vector<SResult> sweep_energy(const std::function<SpinModel(double)>& model_at,
                                  const AngleQuad& quad, std::span<const double> omegas) {
  std::vector<SResult> out;
  out.reserve(omegas.size());
  for (double w : omegas) out.push_back(s_indicator(model_at(w), quad));
  return out;
}

}  // namespace pairspin
