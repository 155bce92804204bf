#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dgfrft/laplacian.hpp"
#include "dgfrft/rng.hpp"

namespace dgfrft {

/// Sum over directed edges (i, j) of |f(i) − f(j)|². Weights are ignored; a
/// reciprocal pair contributes twice.
inline double total_variation(const CVector& f, const DiGraph& g) {
  require_same_size(f.size(), g.n(), "total_variation");
  double tv = 0.0;
  for (const Edge& e : g.edges()) tv += std::norm(f[e.src] - f[e.dst]);
  return tv;
}

inline double total_variation(const GraphSignal& f, const DiGraph& g) {
  return total_variation(f.values, g);
}

inline double rmse(const GraphSignal& a, const GraphSignal& b) {
  require_same_size(a.size(), b.size(), "rmse");
  require(a.size() > 0, "rmse: empty signals");
  return std::sqrt((a.values - b.values).squaredNorm() / static_cast<double>(a.size()));
}

struct RecoveryError {
  double e_f = 0.0;    // ‖x_rec − x_true‖ / ‖x_true‖
  double e = 0.0;      // ‖noise‖ / ‖x_true‖
  double ratio = 0.0;  // e_f / e
};

inline RecoveryError relative_recovery_error(const GraphSignal& x_rec, const GraphSignal& x_true,
                                             const GraphSignal& noise) {
  require_same_size(x_rec.size(), x_true.size(), "relative_recovery_error");
  require_same_size(noise.size(), x_true.size(), "relative_recovery_error");
  const double xn = x_true.values.norm();
  require(xn > 0.0, "relative_recovery_error: true signal is zero");
  const double nn = noise.values.norm();
  require(nn > 0.0, "relative_recovery_error: noise is zero, ratio undefined");
  RecoveryError r;
  r.e_f = (x_rec.values - x_true.values).norm() / xn;
  r.e = nn / xn;
  r.ratio = r.e_f / r.e;
  return r;
}

/// n i.i.d. N(0, sigma²) draws from CounterRng(seed): entries 2k, 2k+1 come from Box–Muller pair k.
inline GraphSignal gaussian_noise(Index n, double sigma, std::uint64_t seed) {
  require(n >= 1, "gaussian_noise: n must be positive");
  require(sigma > 0.0 && std::isfinite(sigma), "gaussian_noise: sigma must be positive");
  const CounterRng rng(seed);
  RVector v(n);
  for (Index i = 0; i < n; i += 2) {
    const auto [z0, z1] = rng.normal_pair_at(static_cast<std::uint64_t>(i / 2));
    v[i] = sigma * z0;
    if (i + 1 < n) v[i + 1] = sigma * z1;
  }
  return GraphSignal::real(v);
}

/// Total variation of each fractional basis vector p_l, in ascending-xi order.
inline RVector tv_spectrum(const FractionalSpectrum& fs, const DiGraph& g) {
  require_same_size(fs.n(), g.n(), "tv_spectrum");
  RVector out(fs.n());
  for (Index l = 0; l < fs.n(); ++l) out[l] = total_variation(CVector(fs.P.col(l)), g);
  return out;
}

struct RunRecord {
  std::uint64_t seed = 0;
  double rmse = 0.0;
  double relative_error = 0.0;
};

/// Aggregate of a Monte-Carlo experiment; means are taken over per_run in seed order.
struct ExperimentStats {
  double rmse = 0.0;
  double relative_error = 0.0;
  std::vector<RunRecord> per_run;

  [[nodiscard]] std::size_t runs() const { return per_run.size(); }

  static ExperimentStats from_runs(std::vector<RunRecord> runs) {
    require(!runs.empty(), "ExperimentStats: no runs");
    std::sort(runs.begin(), runs.end(), [](const RunRecord& a, const RunRecord& b) { return a.seed < b.seed; });
    ExperimentStats s;
    for (const RunRecord& r : runs) {
      s.rmse += r.rmse;
      s.relative_error += r.relative_error;
    }
    s.rmse /= static_cast<double>(runs.size());
    s.relative_error /= static_cast<double>(runs.size());
    s.per_run = std::move(runs);
    return s;
  }
};

}  // namespace dgfrft
