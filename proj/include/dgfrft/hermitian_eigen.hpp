#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "dgfrft/core.hpp"

namespace dgfrft {

/// Eigen-decomposition A = vectors * diag(values) * vectors^H.
struct HermitianSpectrum {
  RVector values;   // ascending
  CMatrix vectors;  // column k pairs with values[k]
  double residual = 0.0;  // max_k ‖A v_k − λ_k v_k‖₂
};

namespace eig_detail {

inline constexpr int kMaxSweeps = 30;
inline constexpr double kOffDiagonalTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kClusterTol = 1e-9;
inline constexpr double kAnchorTieTol = 1e-10;

// Zeroes a(p, q) with the unitary G = diag(1, e^{-i phi}) * R(c, s), where
// a(p, q) = |a(p, q)| e^{i phi} and R is the real Jacobi rotation of the
// phase-stripped 2x2 block. Updates a <- G^H a G and v <- v G. Only columns
// p, q are recomputed; rows are mirrored so a stays exactly Hermitian.
inline void rotate(CMatrix& a, CMatrix& v, Index p, Index q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = std::abs(theta) > 1e150 ? 0.5 / std::abs(theta)
                                      : 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx ph = std::conj(apq / mag);

  const cplx g00 = c, g01 = s, g10 = -s * ph, g11 = c * ph;
  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const cplx akp = a(k, p), akq = a(k, q);
    const cplx bp = akp * g00 + akq * g10;
    const cplx bq = akp * g01 + akq * g11;
    a(k, p) = bp;
    a(k, q) = bq;
    a(p, k) = std::conj(bp);
    a(q, k) = std::conj(bq);
  }
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (Index k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * g00 + vkq * g10;
    v(k, q) = vkp * g01 + vkq * g11;
  }
}

inline double off_diagonal_norm(const CMatrix& a) {
  double acc = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

// Lowest index whose modulus is within kAnchorTieTol of the column maximum.
inline Index anchor_index(const Eigen::Ref<const CVector>& v) {
  const double m = v.cwiseAbs().maxCoeff();
  for (Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) >= m - kAnchorTieTol) return i;
  return 0;
}

inline void fix_phase(Eigen::Ref<CVector> v) {
  const Index k = anchor_index(v);
  const double mag = std::abs(v[k]);
  if (mag == 0.0) return;
  v *= std::conj(v[k]) / mag;
  v[k] = cplx(v[k].real(), 0.0);
}

// Half-open index ranges [first, last) of ascending values whose neighbours
// differ by at most tol.
inline std::vector<std::pair<Index, Index>> clusters(const RVector& values, double tol) {
  std::vector<std::pair<Index, Index>> out;
  Index b = 0;
  for (Index k = 1; k <= values.size(); ++k) {
    if (k == values.size() || values[k] - values[k - 1] > tol) {
      out.emplace_back(b, k);
      b = k;
    }
  }
  return out;
}

}  // namespace eig_detail

/**
 * Eigenvalues and eigenvectors of a complex Hermitian matrix by cyclic Jacobi.
 *
 * Sweeps visit every pair (p, q), p < q, in row order and rotate it out.
 * Iteration stops once the off-diagonal Frobenius norm is at most
 * 1e-12 * ‖A‖_F; 30 sweeps without reaching it is an error.
 *
 * Output convention, which makes the result a deterministic function of A:
 *  - values ascending;
 *  - each vector scaled so that its largest-modulus entry is real and
 *    positive, ties going to the lowest index;
 *  - eigenvalues within 1e-9 * (1 + ‖A‖_max) of a neighbour form a cluster;
 *    cluster vectors are re-orthonormalized by modified Gram–Schmidt and
 *    ordered by ascending anchor index (the entry used for the phase).
 */
inline HermitianSpectrum eig_hermitian(const CMatrix& input) {
  using namespace eig_detail;
  require(input.rows() == input.cols(), "eig_hermitian: matrix must be square");
  require(input.rows() >= 1, "eig_hermitian: matrix must be non-empty");
  require(all_finite(input), "eig_hermitian: non-finite entry");
  require(hermitian_defect(input) <= kHermitianTol, "eig_hermitian: matrix is not Hermitian");

  const Index n = input.rows();
  const CMatrix a0 = 0.5 * (input + input.adjoint());
  CMatrix a = a0;
  CMatrix v = CMatrix::Identity(n, n);

  const double threshold = kOffDiagonalTol * a0.norm();
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const double app = std::abs(a(p, p).real()), aqq = std::abs(a(q, q).real());
        if (sweep > 3 && app + 100.0 * mag == app && aqq + 100.0 * mag == aqq) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  if (!converged) throw NumericalError("eig_hermitian: no convergence within 30 sweeps");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return a(x, x).real() < a(y, y).real(); });

  HermitianSpectrum out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }

  const double cluster_tol = kClusterTol * (1.0 + max_abs(a0));
  for (auto [b, e] : clusters(out.values, cluster_tol)) {
    for (Index j = b; j < e; ++j) {
      for (Index i = b; i < j; ++i) {
        const cplx proj = out.vectors.col(i).dot(out.vectors.col(j));
        out.vectors.col(j) -= proj * out.vectors.col(i);
      }
      out.vectors.col(j).normalize();
      fix_phase(out.vectors.col(j));
    }
    if (e - b > 1) {
      std::vector<Index> idx(static_cast<std::size_t>(e - b));
      std::iota(idx.begin(), idx.end(), b);
      std::stable_sort(idx.begin(), idx.end(), [&](Index x, Index y) {
        return anchor_index(out.vectors.col(x)) < anchor_index(out.vectors.col(y));
      });
      const CMatrix block = out.vectors.middleCols(b, e - b);
      for (Index k = 0; k < e - b; ++k) out.vectors.col(b + k) = block.col(idx[k] - b);
    }
  }

  const CMatrix r = a0 * out.vectors - out.vectors * out.values.cast<cplx>().asDiagonal();
  out.residual = r.colwise().norm().maxCoeff();
  return out;
}

/// Elementwise v^alpha with 0^alpha = 0. Values with |v| < 1e-10 are treated
/// as 0, so round-off around a zero eigenvalue is not inflated by the power.
inline RVector real_diag_power(const RVector& values, double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "real_diag_power: alpha must lie in (0, 1]");
  RVector out(values.size());
  for (Index k = 0; k < values.size(); ++k) {
    const double v = values[k];
    require(std::isfinite(v), "real_diag_power: non-finite value");
    if (v < -1e-10) {
      throw InvalidArgument("real_diag_power: value " + std::to_string(v) +
                            " is negative; the source matrix is not positive semi-definite");
    }
    out[k] = v < 1e-10 ? 0.0 : (alpha == 1.0 ? v : std::pow(v, alpha));
  }
  return out;
}

/// Eigen-angles in (-pi, pi] and a shared eigenbasis of a unitary matrix.
struct UnitaryEigensystem {
  CMatrix basis;  // columns orthonormal
  RVector angles;
};

/**
 * Simultaneous eigenbasis of M through the commuting Hermitian pair
 * C = (M + M^H)/2 and S = (M - M^H)/(2i). The combination C + r S with
 * r = (sqrt(5) - 1)/2 separates distinct eigen-angles generically; any
 * cluster it leaves is split by diagonalizing S restricted to the cluster.
 * Angle k is atan2(w^H S w, w^H C w); angles within 1e-12 of -pi map to +pi.
 */
inline UnitaryEigensystem unitary_eigensystem(const CMatrix& m) {
  require(m.rows() == m.cols() && m.rows() >= 1, "unitary_eigensystem: matrix must be square");
  require(all_finite(m), "unitary_eigensystem: non-finite entry");
  require(unitarity_defect(m) <= 1e-8, "unitary_eigensystem: matrix is not unitary");

  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  const CMatrix c = 0.5 * (m + m.adjoint());
  const CMatrix s = cplx(0.0, -0.5) * (m - m.adjoint());
  CMatrix mixed = c + r * s;
  mixed = 0.5 * (mixed + mixed.adjoint());

  HermitianSpectrum hs = eig_hermitian(mixed);
  CMatrix w = std::move(hs.vectors);
  const double tol = eig_detail::kClusterTol * (1.0 + max_abs(mixed));
  for (auto [b, e] : eig_detail::clusters(hs.values, tol)) {
    if (e - b < 2) continue;
    const CMatrix wc = w.middleCols(b, e - b);
    CMatrix sc = wc.adjoint() * s * wc;
    sc = 0.5 * (sc + sc.adjoint());
    w.middleCols(b, e - b) = wc * eig_hermitian(sc).vectors;
  }

  UnitaryEigensystem out{w, RVector(m.rows())};
  for (Index k = 0; k < m.rows(); ++k) {
    const auto wk = w.col(k);
    const double re = wk.dot(c * wk).real();
    const double im = wk.dot(s * wk).real();
    double theta = std::atan2(im, re);
    if (theta <= -std::numbers::pi + 1e-12) theta = std::numbers::pi;
    out.angles[k] = theta;
  }
  return out;
}

/**
 * Principal power M^alpha = W diag(e^{i alpha theta}) W^H of a unitary M,
 * theta in (-pi, pi]. Throws NumericalError when the recovered eigensystem
 * does not reproduce M to 1e-7 (an unresolved degenerate cluster).
 */
inline CMatrix unitary_fractional_power(const CMatrix& m, double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "unitary_fractional_power: alpha must lie in (0, 1]");
  const UnitaryEigensystem es = unitary_eigensystem(m);

  CVector full(m.rows()), frac(m.rows());
  for (Index k = 0; k < m.rows(); ++k) {
    full[k] = std::polar(1.0, es.angles[k]);
    frac[k] = std::polar(1.0, alpha * es.angles[k]);
  }
  if (max_abs(es.basis * full.asDiagonal() * es.basis.adjoint() - m) > 1e-7) {
    throw NumericalError("unitary_fractional_power: degenerate eigen-angle cluster not resolved");
  }
  CMatrix out = es.basis * frac.asDiagonal() * es.basis.adjoint();
  if (unitarity_defect(out) > 1e-8) {
    throw NumericalError("unitary_fractional_power: result lost unitarity");
  }
  return out;
}

}  // namespace dgfrft
