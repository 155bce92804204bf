#pragma once

#include <string_view>
#include <vector>

#include "dgfrft/transform.hpp"

namespace dgfrft {

enum class KernelKind { lowpass_rational, window, custom };

inline std::string_view to_string(KernelKind k) {
  switch (k) {
    case KernelKind::lowpass_rational: return "lowpass_rational";
    case KernelKind::window: return "window";
    case KernelKind::custom: return "custom";
  }
  return "?";
}

/// Per-frequency multipliers h, indexed like the fractional eigenvalues.
struct SpectralKernel {
  RVector h;
  KernelKind kind = KernelKind::custom;
  std::vector<double> params;

  [[nodiscard]] Index size() const { return h.size(); }
};

/// h[l] = 1 / (1 + c xi[l]).
inline SpectralKernel lowpass_kernel(const RVector& xi, double c) {
  require(c > 0.0 && std::isfinite(c), "lowpass_kernel: c must be positive");
  require(all_finite(xi) && (xi.size() == 0 || xi.minCoeff() >= 0.0),
          "lowpass_kernel: eigenvalues must be finite and nonnegative");
  RVector h(xi.size());
  for (Index l = 0; l < xi.size(); ++l) h[l] = 1.0 / (1.0 + c * xi[l]);
  return {std::move(h), KernelKind::lowpass_rational, {c}};
}

/// Passes the first `ell` frequencies: h[i] = 1 for i < ell, else 0.
inline SpectralKernel window_kernel(Index n, Index ell) {
  require(n >= 1, "window_kernel: n must be positive");
  require(ell >= 0 && ell <= n, "window_kernel: ell must lie in [0, n]");
  RVector h = RVector::Zero(n);
  h.head(ell).setOnes();
  return {std::move(h), KernelKind::window, {static_cast<double>(ell)}};
}

/// Filter given directly by its spectral response.
inline SpectralKernel custom_kernel(RVector h) {
  require(all_finite(h), "custom_kernel: non-finite multiplier");
  return {std::move(h), KernelKind::custom, {}};
}

/// f_out = P diag(h) P^H f, computed through the transform.
inline GraphSignal apply_filter(const GraphSignal& f, const SpectralKernel& k, const FractionalSpectrum& fs) {
  require_same_size(k.size(), fs.n(), "apply_filter: kernel vs spectrum");
  SpectralCoefficients c = dgfrft(f, fs);
  c.values = c.values.cwiseProduct(k.h.cast<cplx>());
  return idgfrft(c, fs);
}

/// Transfer matrix H = P diag(h) P^H.
inline CMatrix transfer_matrix(const SpectralKernel& k, const FractionalSpectrum& fs) {
  require_same_size(k.size(), fs.n(), "transfer_matrix: kernel vs spectrum");
  return fs.P * k.h.cast<cplx>().asDiagonal() * fs.P.adjoint();
}

struct DenoiseResult {
  GraphSignal estimate;
  double discarded_imaginary_norm = 0.0;  // ‖Im f_out‖₂ dropped for real input
};

/**
 * Spectral denoising f̃ = P diag(h) P^H g. For a real input the imaginary
 * part of the output is dropped and its norm reported; complex input is
 * returned as is.
 */
inline DenoiseResult denoise(const GraphSignal& noisy, const FractionalSpectrum& fs, const SpectralKernel& k) {
  GraphSignal out = apply_filter(noisy, k, fs);
  DenoiseResult r{std::move(out), 0.0};
  if (noisy.is_real()) {
    r.discarded_imaginary_norm = r.estimate.values.imag().norm();
    r.estimate.values = r.estimate.values.real().cast<cplx>();
  }
  r.estimate.unit = noisy.unit;
  return r;
}

}  // namespace dgfrft
