#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dgfrft/filters.hpp"
#include "dgfrft/metrics.hpp"

namespace dgfrft {

/**
 * Runs fn(k) for k in [0, count) on up to `threads` workers. Worker t takes
 * k = t, t + threads, ...; callers write results into slot k, so the outcome
 * does not depend on the thread count. The first exception is rethrown.
 */
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t k = t; k < count; k += threads) fn(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Seed of Monte-Carlo run k.
inline std::uint64_t run_seed(std::uint64_t master, std::size_t k) { return master + k; }

// ---------------------------------------------------------------------------
// Temperature denoising: GFT on the undirected graph against the Hermitian
// GFT and the DGFRFT on the directed graph, all with the low-pass kernel
// 1 / (1 + c xi).

struct SimUsConfig {
  double alpha = 0.9;
  double q = 0.5;
  double c = 0.02;
  double sigma = 10.0;
  std::uint64_t seed = 0;
  std::size_t runs = 100;
  unsigned threads = 1;
};

struct DenoiseArm {
  std::string graph_type;
  std::string method;
  double alpha = 1.0;
  double q = 0.0;
  FractionalSpectrum spectrum;
  SpectralKernel kernel;
  ExperimentStats stats;
};

struct SimUsResult {
  std::vector<DenoiseArm> arms;  // GFT, Hermitian GFT, DGFRFT
};

inline std::vector<DenoiseArm> sim_us_arms(const DiGraph& g, const SimUsConfig& cfg) {
  std::vector<DenoiseArm> arms;
  auto add = [&](std::string type, std::string method, const DiGraph& graph, double q, double alpha) {
    DenoiseArm arm;
    arm.graph_type = std::move(type);
    arm.method = std::move(method);
    arm.alpha = alpha;
    arm.q = q;
    arm.spectrum = fractional_spectrum(hermitian_laplacian(graph, q), alpha);
    arm.kernel = lowpass_kernel(arm.spectrum.xi, cfg.c);
    arms.push_back(std::move(arm));
  };
  add("undirected", "GFT", symmetrized(g), 0.0, 1.0);
  add("directed", "Hermitian GFT", g, cfg.q, 1.0);
  add("directed", "DGFRFT", g, cfg.q, cfg.alpha);
  return arms;
}

inline SimUsResult run_sim_us(const DiGraph& g, const GraphSignal& clean, const SimUsConfig& cfg) {
  require_same_size(clean.size(), g.n(), "sim-us: signal vs graph");
  require(cfg.runs >= 1, "sim-us: runs must be positive");
  SimUsResult result{sim_us_arms(g, cfg)};
  const std::size_t m = result.arms.size();
  std::vector<RunRecord> records(cfg.runs * m);
  const double clean_norm = clean.values.norm();

  parallel_for(cfg.runs, cfg.threads, [&](std::size_t k) {
    const std::uint64_t seed = run_seed(cfg.seed, k);
    const GraphSignal noise = gaussian_noise(g.n(), cfg.sigma, seed);
    const GraphSignal noisy(clean.values + noise.values, clean.unit);
    for (std::size_t a = 0; a < m; ++a) {
      const DenoiseArm& arm = result.arms[a];
      const GraphSignal est = denoise(noisy, arm.spectrum, arm.kernel).estimate;
      const double rel = clean_norm > 0.0 ? (est.values - clean.values).norm() / clean_norm : 0.0;
      records[k * m + a] = {seed, rmse(est, clean), rel};
    }
  });

  for (std::size_t a = 0; a < m; ++a) {
    std::vector<RunRecord> mine;
    mine.reserve(cfg.runs);
    for (std::size_t k = 0; k < cfg.runs; ++k) mine.push_back(records[k * m + a]);
    result.arms[a].stats = ExperimentStats::from_runs(std::move(mine));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Window-filter recovery on a directed network: relative recovery error
// e_f / e of the ell lowest fractional frequencies, per window size.

struct SimBrainConfig {
  double alpha = 0.9;
  double q = 0.2;
  std::optional<double> sigma;               // empty: RMS of the clean signal
  std::uint64_t seed = 0;
  std::size_t runs = 100;
  unsigned threads = 1;
  std::vector<Index> windows;                // empty: default sweep
  std::optional<GraphSignal> base_signal;    // f in x = exp(-f); empty: i / (n - 1)
};

/// {1, 5, 10, 20, 30, n}, restricted to sizes below n.
inline std::vector<Index> default_windows(Index n) {
  std::vector<Index> out;
  for (Index w : {1, 5, 10, 20, 30})
    if (w < n) out.push_back(w);
  out.push_back(n);
  return out;
}

/// x(i) = exp(-f(i)); without a base signal f(i) = i / (n - 1).
inline GraphSignal synthetic_exponential_signal(Index n, const std::optional<GraphSignal>& base) {
  CVector x(n);
  if (base) {
    require_same_size(base->size(), n, "synthetic signal base");
    for (Index i = 0; i < n; ++i) x[i] = std::exp(-base->values[i]);
  } else {
    for (Index i = 0; i < n; ++i) x[i] = std::exp(n > 1 ? -static_cast<double>(i) / static_cast<double>(n - 1) : 0.0);
  }
  return GraphSignal(x);
}

struct WindowRun {
  std::uint64_t seed = 0;
  RecoveryError error;
};

struct WindowArm {
  std::string method;
  double alpha = 1.0;
  double q = 0.0;
  Index ell = 0;
  std::vector<WindowRun> runs;
  ExperimentStats stats;  // relative_error is the mean of e_f / e
};

struct SimBrainResult {
  GraphSignal signal;
  double sigma = 0.0;
  std::vector<WindowArm> arms;  // method-major, then window size
};

inline SimBrainResult run_sim_brain(const DiGraph& g, const SimBrainConfig& cfg) {
  require(cfg.runs >= 1, "sim-brain: runs must be positive");
  const Index n = g.n();
  const std::vector<Index> windows = cfg.windows.empty() ? default_windows(n) : cfg.windows;
  for (Index w : windows) require(w >= 0 && w <= n, "sim-brain: window size out of range [0, n]");

  SimBrainResult result{synthetic_exponential_signal(n, cfg.base_signal), 0.0, {}};
  const GraphSignal& x = result.signal;
  result.sigma = cfg.sigma ? *cfg.sigma : x.values.norm() / std::sqrt(static_cast<double>(n));
  const HermitianLaplacian hl = hermitian_laplacian(g, cfg.q);
  struct Method {
    std::string name;
    double alpha;
    FractionalSpectrum fs;
  };
  std::vector<Method> methods;
  methods.push_back({"DGFRFT", cfg.alpha, fractional_spectrum(hl, cfg.alpha)});
  methods.push_back({"Hermitian GFT", 1.0, cfg.alpha == 1.0 ? methods.front().fs : fractional_spectrum(hl, 1.0)});

  for (const Method& m : methods) {
    for (Index w : windows) {
      WindowArm arm;
      arm.method = m.name;
      arm.alpha = m.alpha;
      arm.q = cfg.q;
      arm.ell = w;
      arm.runs.resize(cfg.runs);
      result.arms.push_back(std::move(arm));
    }
  }

  parallel_for(cfg.runs, cfg.threads, [&](std::size_t k) {
    const std::uint64_t seed = run_seed(cfg.seed, k);
    const GraphSignal noise = gaussian_noise(n, result.sigma, seed);
    const GraphSignal noisy(x.values + noise.values);
    std::size_t slot = 0;
    for (const Method& m : methods) {
      for (Index w : windows) {
        const GraphSignal est = denoise(noisy, m.fs, window_kernel(n, w)).estimate;
        result.arms[slot++].runs[k] = {seed, relative_recovery_error(est, x, noise)};
      }
    }
  });

  for (WindowArm& arm : result.arms) {
    std::vector<RunRecord> recs;
    recs.reserve(arm.runs.size());
    for (const WindowRun& r : arm.runs) {
      recs.push_back({r.seed, r.error.e_f * x.values.norm() / std::sqrt(static_cast<double>(n)), r.error.ratio});
    }
    arm.stats = ExperimentStats::from_runs(std::move(recs));
  }
  return result;
}

}  // namespace dgfrft
