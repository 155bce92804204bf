#pragma once

#include <numbers>

#include "dgfrft/digraph.hpp"
#include "dgfrft/hermitian_eigen.hpp"

namespace dgfrft {

/// Symmetrized weights and their degrees: Ws = (W + W^T)/2, Ds = diag(row sums of Ws).
struct SymmetrizedWeights {
  RMatrix ws;
  RVector degrees;

  [[nodiscard]] RMatrix ds() const { return degrees.asDiagonal(); }
};

/// L = Ds − Γ_q ⊙ Ws together with the pieces it was built from.
struct HermitianLaplacian {
  CMatrix L;
  double q = 0.0;
  RMatrix ws;
  RVector degrees;

  [[nodiscard]] Index n() const { return L.rows(); }
  [[nodiscard]] RMatrix ds() const { return degrees.asDiagonal(); }
};

/// Fractional basis P = U^alpha and fractional eigenvalues xi = v^alpha of a Hermitian Laplacian.
struct FractionalSpectrum {
  CMatrix P;
  RVector xi;
  double alpha = 1.0;
  double q = 0.0;
  HermitianSpectrum base;

  [[nodiscard]] Index n() const { return P.rows(); }
};

inline SymmetrizedWeights symmetrize(const DiGraph& g) {
  const RMatrix& w = g.weights();
  SymmetrizedWeights out;
  out.ws = 0.5 * (w + w.transpose());
  out.degrees = out.ws.rowwise().sum();
  return out;
}

inline void require_rotation(double q) {
  require(q >= 0.0 && q < 1.0, "rotation parameter q must lie in [0, 1)");
}

/**
 * Phase matrix Γ_q with entries exp(2πi q (w_ij − w_ji)), evaluated for every
 * pair including non-edges (where the entry is 1). Only the upper triangle is
 * evaluated; the lower triangle is its conjugate, so Γ_q is exactly Hermitian.
 */
inline CMatrix gamma(const DiGraph& g, double q) {
  require_rotation(q);
  const RMatrix& w = g.weights();
  const Index n = g.n();
  CMatrix out(n, n);
  for (Index i = 0; i < n; ++i) {
    out(i, i) = 1.0;
    for (Index j = i + 1; j < n; ++j) {
      const double diff = w(i, j) - w(j, i);
      const cplx z = diff == 0.0 ? cplx(1.0, 0.0) : std::polar(1.0, 2.0 * std::numbers::pi * q * diff);
      out(i, j) = z;
      out(j, i) = std::conj(z);
    }
  }
  return out;
}

inline HermitianLaplacian hermitian_laplacian(const DiGraph& g, double q) {
  const CMatrix phases = gamma(g, q);
  SymmetrizedWeights sw = symmetrize(g);
  HermitianLaplacian out;
  out.q = q;
  out.L = sw.ds().cast<cplx>() - phases.cwiseProduct(sw.ws.cast<cplx>());
  out.ws = std::move(sw.ws);
  out.degrees = std::move(sw.degrees);
  return out;
}

/**
 * Eigendecomposes L, then P = U^alpha (principal unitary power) and
 * xi = v^alpha. At alpha = 1, P is U itself.
 */
inline FractionalSpectrum fractional_spectrum(const HermitianLaplacian& hl, double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "fractional_spectrum: alpha must lie in (0, 1]");
  FractionalSpectrum out;
  out.alpha = alpha;
  out.q = hl.q;
  out.base = eig_hermitian(hl.L);
  if (out.base.values.minCoeff() < -1e-10) {
    throw NumericalError("fractional_spectrum: Laplacian has a negative eigenvalue");
  }
  out.xi = real_diag_power(out.base.values, alpha);
  out.P = alpha == 1.0 ? out.base.vectors : unitary_fractional_power(out.base.vectors, alpha);
  return out;
}

/// L_{alpha,d} = P diag(xi) P^H.
inline CMatrix fractional_laplacian_matrix(const FractionalSpectrum& fs) {
  CMatrix out = fs.P * fs.xi.cast<cplx>().asDiagonal() * fs.P.adjoint();
  return out;
}

}  // namespace dgfrft
