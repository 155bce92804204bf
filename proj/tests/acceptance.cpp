// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [criterion ...]   (default: all of 1..12)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace dgfrft;
using namespace dgfrft::fixtures;

namespace {

const std::vector<double> kQs = {0.0, 0.1, 0.25, 0.5, 0.9};
const std::vector<double> kAlphas = {0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
constexpr int kGraphs = 20;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fix(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

// Every (graph, q, alpha) of the sweep, shared by several criteria.
struct SweepCase {
  int graph;
  double q;
  double alpha;
  FractionalSpectrum fs;
};

const std::vector<SweepCase>& sweep() {
  static const std::vector<SweepCase> cases = [] {
    std::vector<SweepCase> out;
    for (int s = 0; s < kGraphs; ++s) {
      const DiGraph g = random_digraph(50, 0.1, static_cast<std::uint64_t>(s));
      for (double q : kQs) {
        const HermitianLaplacian hl = hermitian_laplacian(g, q);
        for (double a : kAlphas) out.push_back({s, q, a, fractional_spectrum(hl, a)});
      }
    }
    return out;
  }();
  return cases;
}

Outcome c1_hermiticity() {
  double worst = 0.0;
  for (const SweepCase& c : sweep()) worst = std::max(worst, hermitian_defect(fractional_laplacian_matrix(c.fs)));
  return {worst <= 1e-10, "max ||L_ad - L_ad^H||_max = " + sci(worst) + " (tol 1e-10, " +
                              std::to_string(sweep().size()) + " cases)"};
}

Outcome c2_psd() {
  double lowest = INFINITY;
  for (const SweepCase& c : sweep()) {
    CMatrix l = fractional_laplacian_matrix(c.fs);
    l = 0.5 * (l + l.adjoint());
    lowest = std::min(lowest, eig_hermitian(l).values.minCoeff());
  }
  return {lowest >= -1e-9, "min eigenvalue of L_ad = " + sci(lowest) + " (tol -1e-9)"};
}

Outcome c3_unitarity_roundtrip() {
  double unit = 0.0, trip = 0.0;
  Gen gen(3);
  for (const SweepCase& c : sweep()) {
    unit = std::max(unit, unitarity_defect(c.fs.P));
    for (int t = 0; t < 100; ++t) {
      const GraphSignal f = t % 2 ? GraphSignal(gen.complex_vector(50)) : GraphSignal::real(gen.real_vector(50));
      trip = std::max(trip, (idgfrft(dgfrft::dgfrft(f, c.fs), c.fs).values - f.values).cwiseAbs().maxCoeff());
    }
  }
  return {unit <= 1e-8 && trip <= 1e-9,
          "max ||P^H P - I||_max = " + sci(unit) + " (tol 1e-8), max round-trip error = " + sci(trip) + " (tol 1e-9)"};
}

Outcome c4_parseval() {
  double worst = 0.0;
  Gen gen(4);
  for (const SweepCase& c : sweep()) {
    for (int t = 0; t < 10; ++t) {
      const GraphSignal f = t % 2 ? GraphSignal(gen.complex_vector(50)) : GraphSignal::real(gen.real_vector(50));
      const double e = f.values.squaredNorm();
      worst = std::max(worst, std::abs(e - dgfrft::dgfrft(f, c.fs).values.squaredNorm()) / e);
    }
  }
  return {worst <= 1e-9, "max relative energy gap = " + sci(worst) + " (tol 1e-9)"};
}

Outcome c5_index_additivity() {
  double worst = 0.0;
  int checked = 0;
  for (int s = 0; s < kGraphs; ++s) {
    const DiGraph g = random_digraph(50, 0.1, static_cast<std::uint64_t>(s));
    for (double q : kQs) {
      const HermitianLaplacian hl = hermitian_laplacian(g, q);
      const UnitaryEigensystem es = unitary_eigensystem(fractional_spectrum(hl, 1.0).P);
      for (auto [a, b] : {std::pair{0.3, 0.4}, {0.5, 0.5}, {0.2, 0.7}}) {
        // principal branch: (a + b) theta must stay inside (-pi, pi]
        const double ab = a + b;
        if (std::any_of(es.angles.data(), es.angles.data() + es.angles.size(),
                        [&](double th) { return ab * th <= -std::numbers::pi || ab * th > std::numbers::pi; }))
          continue;
        const CMatrix pa = fractional_spectrum(hl, a).P;
        const CMatrix pb = fractional_spectrum(hl, b).P;
        const CMatrix pab = fractional_spectrum(hl, ab).P;
        worst = std::max(worst, max_abs(pa * pb - pab));
        ++checked;
      }
    }
  }
  return {worst <= 1e-7 && checked > 0,
          "max ||P(a)P(b) - P(a+b)||_max = " + sci(worst) + " over " + std::to_string(checked) + " cases (tol 1e-7)"};
}

Outcome c6_reduction() {
  double red = 0.0, gft = 0.0;
  Gen gen(6);
  for (int s = 0; s < kGraphs; ++s) {
    const DiGraph g = random_digraph(50, 0.1, static_cast<std::uint64_t>(s));
    const DiGraph sym = symmetrized(g);
    for (double a : kAlphas) {
      const FractionalSpectrum ref = fractional_spectrum(hermitian_laplacian(sym, 0.0), a);
      const GraphSignal f(gen.complex_vector(50));
      const CVector cref = dgfrft::dgfrft(f, ref).values;
      for (double q : kQs) {
        const FractionalSpectrum fs = fractional_spectrum(hermitian_laplacian(sym, q), a);
        red = std::max(red, (dgfrft::dgfrft(f, fs).values - cref).cwiseAbs().maxCoeff());
      }
    }
    for (double q : kQs) {
      const HermitianLaplacian hl = hermitian_laplacian(g, q);
      const HermitianSpectrum hs = eig_hermitian(hl.L);
      const FractionalSpectrum fs = fractional_spectrum(hl, 1.0);
      const GraphSignal f(gen.complex_vector(50));
      gft = std::max(gft, (dgfrft::dgfrft(f, fs).values - hs.vectors.adjoint() * f.values).cwiseAbs().maxCoeff());
    }
  }
  return {red <= 1e-8 && gft <= 1e-8, "symmetric graphs: max |c_q - c_0| = " + sci(red) +
                                          "; alpha = 1 vs Hermitian GFT: " + sci(gft) + " (tol 1e-8)"};
}

Outcome c7_analytic() {
  const double s3 = std::sqrt(3.0) / 2.0;
  const RVector v = eig_hermitian(hermitian_laplacian(cycle3(), 0.25).L).values;
  const double closed = std::max({std::abs(v[0] - (1.0 - s3)), std::abs(v[1] - 1.0), std::abs(v[2] - (1.0 + s3))});
  double worst = 0.0;
  Gen gen(7);
  int count = 0;
  for (Index n = 2; n <= 4; ++n) {
    for (int t = 0; t < 200; ++t, ++count) {
      const CMatrix a = gen.hermitian(n);
      const std::vector<double> ref = oracle::oracle_charpoly_eigs(a);
      const RVector got = eig_hermitian(a).values;
      for (Index k = 0; k < n; ++k) worst = std::max(worst, std::abs(got[k] - ref[static_cast<std::size_t>(k)]));
    }
  }
  return {closed <= 1e-10 && worst <= 1e-8, "3-cycle closed-form gap = " + sci(closed) + " (tol 1e-10); solver vs " +
                                                "characteristic polynomial on " + std::to_string(count) +
                                                " matrices = " + sci(worst) + " (tol 1e-8)"};
}

Outcome c8_convolution() {
  double thm = 0.0, orc = 0.0;
  Gen gen(8);
  for (std::size_t i = 0; i < sweep().size(); i += 3) {
    const FractionalSpectrum& fs = sweep()[i].fs;
    const GraphSignal f(gen.complex_vector(50)), g(gen.complex_vector(50));
    const CVector lhs = dgfrft::dgfrft(convolve(f, g, fs), fs).values;
    const CVector rhs = dgfrft::dgfrft(f, fs).values.cwiseProduct(dgfrft::dgfrft(g, fs).values);
    thm = std::max(thm, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Index n = 3 + static_cast<Index>(s % 6);  // 3..8
    const DiGraph g = random_digraph(n, 0.4, s);
    for (double q : kQs) {
      for (double a : kAlphas) {
        const FractionalSpectrum fs = fractional_spectrum(hermitian_laplacian(g, q), a);
        const GraphSignal f(gen.complex_vector(n)), h(gen.complex_vector(n));
        orc = std::max(orc, (convolve(f, h, fs).values - oracle::oracle_convolution(f, h, fs).payload.col(0))
                                .cwiseAbs()
                                .maxCoeff());
      }
    }
  }
  return {thm <= 1e-9 && orc <= 1e-9,
          "convolution theorem gap = " + sci(thm) + ", oracle gap (n <= 8) = " + sci(orc) + " (tol 1e-9)"};
}

Outcome c9_filtering() {
  double two = 0.0, idem = 0.0;
  Gen gen(9);
  for (std::size_t i = 0; i < sweep().size(); i += 3) {
    const FractionalSpectrum& fs = sweep()[i].fs;
    const GraphSignal f(gen.complex_vector(50));
    RVector h(50);
    for (Index k = 0; k < 50; ++k) h[k] = gen.uniform(-1.0, 2.0);
    for (const SpectralKernel& k : {custom_kernel(h), lowpass_kernel(fs.xi, 0.02), window_kernel(50, 5)}) {
      two = std::max(two, (apply_filter(f, k, fs).values - transfer_matrix(k, fs) * f.values).cwiseAbs().maxCoeff());
    }
    for (Index ell : {0, 1, 5, 17, 50}) {
      const SpectralKernel w = window_kernel(50, ell);
      const GraphSignal once = apply_filter(f, w, fs);
      idem = std::max(idem, (apply_filter(once, w, fs).values - once.values).cwiseAbs().maxCoeff());
    }
  }
  return {two <= 1e-8 && idem <= 1e-9,
          "apply_filter vs transfer matrix = " + sci(two) + " (tol 1e-8), window idempotence = " + sci(idem) +
              " (tol 1e-9)"};
}

Outcome c10_sim_us() {
  const auto t0 = std::chrono::steady_clock::now();
  const DiGraph g = load_edge_list(data_path("us_temperature.edges"));
  const GraphSignal f = load_signal(data_path("us_temperature.signal"), g.n());
  SimUsConfig cfg;  // sigma 10, c 0.02, q 0.5, alpha 0.9, 100 runs from seed 0
  cfg.threads = 4;
  const SimUsResult r = run_sim_us(g, f, cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double gft = r.arms[0].stats.rmse, hgft = r.arms[1].stats.rmse, dg = r.arms[2].stats.rmse;
  auto in_band = [](double x) { return x >= 4.0 && x <= 9.0; };
  const bool pass = dg < hgft && dg < gft && in_band(gft) && in_band(hgft) && in_band(dg) && secs < 60.0;
  return {pass, "mean RMSE GFT " + fix(gft) + ", Hermitian GFT " + fix(hgft) + ", DGFRFT " + fix(dg) +
                    " (need DGFRFT lowest, all in [4, 9]); " + fix(secs) + " s"};
}

Outcome c11_sim_brain() {
  const DiGraph g = load_edge_list(data_path("macaque.edges"));
  SimBrainConfig cfg;  // alpha 0.9, q 0.2
  cfg.runs = 100;
  cfg.windows = {5, 47};
  cfg.threads = 4;
  const SimBrainResult r = run_sim_brain(g, cfg);
  double identity_gap = 0.0, worst5 = 0.0;
  bool finite = true;
  std::vector<double> ratios5;
  for (const WindowArm& arm : r.arms) {
    if (arm.method != "DGFRFT") continue;
    for (const WindowRun& run : arm.runs) {
      if (arm.ell == 47) identity_gap = std::max(identity_gap, std::abs(run.error.ratio - 1.0));
      if (arm.ell == 5) {
        finite = finite && std::isfinite(run.error.ratio);
        worst5 = std::max(worst5, run.error.ratio);
        ratios5.push_back(run.error.ratio);
      }
    }
  }
  std::sort(ratios5.begin(), ratios5.end());
  const double median = ratios5.empty() ? NAN : 0.5 * (ratios5[49] + ratios5[50]);
  const bool shape = g.n() == 47 && g.edges().size() == 505;
  const bool pass = shape && identity_gap <= 1e-9 && finite && worst5 <= 10.0 && ratios5.size() == 100;
  return {pass, "n = " + std::to_string(g.n()) + ", edges = " + std::to_string(g.edges().size()) +
                    "; ell = 47 max |ratio - 1| = " + sci(identity_gap) + " (tol 1e-9); ell = 5 median " + fix(median) +
                    ", max " + fix(worst5) + " (bound 10)"};
}

Outcome c12_determinism() {
  const std::string us = data_path("us_temperature.edges");
  const std::string sig = data_path("us_temperature.signal");
  const std::string mac = data_path("macaque.edges");
  const std::vector<std::string> commands = {
      "spectrum --graph " + us,
      "spectrum --graph " + mac + " --alpha 0.6 --q 0.2 --format json",
      "tv --graph " + us + " --alpha 0.8",
      "transform --graph " + us + " --signal " + sig,
      "transform --graph " + us + " --signal " + sig + " --format json",
      "filter --graph " + us + " --signal " + sig + " --ell 5",
      "filter --graph " + us + " --signal " + sig + " --kernel lowpass --c 0.02",
      "denoise --graph " + us + " --signal " + sig + " --sigma 10 --seed 42",
      "sim-us --runs 30 --threads 4",
      "sim-us --runs 30 --threads 4 --per-run --format json",
      "sim-brain --runs 30 --threads 4",
      "random-graph --n 50 --p 0.1 --seed 5",
  };
  int failures = 0;
  std::string first_bad;
  auto check = [&](const std::string& label, const std::string& a, const std::string& b) {
    const std::filesystem::path pa = scratch(a), pb = scratch(b);
    if (slurp(pa).empty() || slurp(pa) != slurp(pb)) {
      ++failures;
      if (first_bad.empty()) first_bad = label;
    }
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const std::string a = "det_" + std::to_string(i) + "_a.out", b = "det_" + std::to_string(i) + "_b.out";
    const int sa = run_cli(commands[i] + " --out " + scratch(a).string()).status;
    const int sb = run_cli(commands[i] + " --out " + scratch(b).string()).status;
    if (sa != 0 || sb != 0) {
      ++failures;
      if (first_bad.empty()) first_bad = commands[i] + " (exit status)";
      continue;
    }
    check(commands[i], a, b);
  }
  // thread count must not matter
  for (const std::string& sim : {std::string("sim-us --runs 30 --per-run"), std::string("sim-brain --runs 30")}) {
    const int s1 = run_cli(sim + " --threads 1 --out " + scratch("thr_1.out").string()).status;
    const int s7 = run_cli(sim + " --threads 7 --out " + scratch("thr_7.out").string()).status;
    if (s1 != 0 || s7 != 0) {
      ++failures;
      continue;
    }
    check(sim + " threads 1 vs 7", "thr_1.out", "thr_7.out");
  }
  return {failures == 0, std::to_string(commands.size() + 2) + " comparisons, " + std::to_string(failures) +
                             " differing" + (first_bad.empty() ? "" : " (first: " + first_bad + ")")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Hermiticity of the fractional Laplacian", c1_hermiticity},
      {"Positive semi-definiteness", c2_psd},
      {"Unitarity and round trip", c3_unitarity_roundtrip},
      {"Parseval relation", c4_parseval},
      {"Index additivity on the principal branch", c5_index_additivity},
      {"Reduction on symmetric graphs and at alpha = 1", c6_reduction},
      {"Analytic and characteristic-polynomial oracles", c7_analytic},
      {"Convolution theorem and oracle", c8_convolution},
      {"Filtering equivalence and window idempotence", c9_filtering},
      {"US temperature denoising regression", c10_sim_us},
      {"Macaque window recovery regression", c11_sim_brain},
      {"CLI determinism", c12_determinism},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s: %s: %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
