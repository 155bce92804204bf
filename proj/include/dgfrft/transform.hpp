#pragma once

#include "dgfrft/laplacian.hpp"

namespace dgfrft {

/// DGFRFT coefficients, tagged with the (alpha, q) of the basis that produced them.
struct SpectralCoefficients {
  CVector values;
  double alpha = 1.0;
  double q = 0.0;

  [[nodiscard]] Index size() const { return values.size(); }
};

inline void require_same_domain(const SpectralCoefficients& c, const FractionalSpectrum& fs) {
  require_same_size(c.size(), fs.n(), "spectral coefficients vs spectrum");
  if (c.alpha != fs.alpha || c.q != fs.q) {
    throw InvalidArgument("coefficients come from a different fractional domain (alpha, q)");
  }
}

/// Forward transform f̂ = P^H f.
inline SpectralCoefficients dgfrft(const GraphSignal& f, const FractionalSpectrum& fs) {
  require_same_size(f.size(), fs.n(), "dgfrft: signal vs spectrum");
  return {fs.P.adjoint() * f.values, fs.alpha, fs.q};
}

/// Inverse transform f = P f̂.
inline GraphSignal idgfrft(const SpectralCoefficients& c, const FractionalSpectrum& fs) {
  require_same_domain(c, fs);
  return GraphSignal(fs.P * c.values);
}

/// Graph fractional convolution: inverse transform of the product of both spectra.
inline GraphSignal convolve(const GraphSignal& f, const GraphSignal& g, const FractionalSpectrum& fs) {
  require_same_size(f.size(), g.size(), "convolve");
  SpectralCoefficients fh = dgfrft(f, fs);
  const SpectralCoefficients gh = dgfrft(g, fs);
  fh.values = fh.values.cwiseProduct(gh.values);
  return idgfrft(fh, fs);
}

}  // namespace dgfrft
