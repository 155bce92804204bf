#pragma once

#include <cstdint>
#include <string>

#include "dgfrft/dgfrft.hpp"

#ifndef DGFRFT_DATA_DIR
#define DGFRFT_DATA_DIR "data"
#endif

namespace dgfrft::fixtures {

inline std::string data_path(const std::string& name) { return std::string(DGFRFT_DATA_DIR) + "/" + name; }

// Deterministic sample source for randomized tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return rng_.uniform_at(k_++); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const auto [z, unused] = rng_.normal_pair_at(1'000'000'000ULL + k_++);
    (void)unused;
    return z;
  }
  cplx cnormal() { return {normal(), normal()}; }

  RVector real_vector(Index n) {
    RVector v(n);
    for (Index i = 0; i < n; ++i) v[i] = normal();
    return v;
  }
  CVector complex_vector(Index n) {
    CVector v(n);
    for (Index i = 0; i < n; ++i) v[i] = cnormal();
    return v;
  }
  CMatrix hermitian(Index n) {
    CMatrix a(n, n);
    for (Index i = 0; i < n; ++i) {
      a(i, i) = normal();
      for (Index j = i + 1; j < n; ++j) {
        a(i, j) = cnormal();
        a(j, i) = std::conj(a(i, j));
      }
    }
    return a;
  }
  /// Random unitary from the Hermitian eigenbasis of a random matrix.
  CMatrix unitary(Index n) { return eig_hermitian(hermitian(n)).vectors; }

 private:
  CounterRng rng_;
  std::uint64_t k_ = 0;
};

inline DiGraph cycle3() { return DiGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}}); }
inline DiGraph bidirectional_pair() { return DiGraph(2, {{0, 1, 1.0}, {1, 0, 1.0}}); }

inline GraphSignal signal_of(const CVector& v) { return GraphSignal(v); }

}  // namespace dgfrft::fixtures
