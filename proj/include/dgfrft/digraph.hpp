#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dgfrft/core.hpp"
#include "dgfrft/rng.hpp"

namespace dgfrft {

struct Edge {
  Index src = 0;
  Index dst = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Weighted directed graph on vertices 0..n-1 with a dense weight matrix.
 *
 * W(i, j) is the weight of edge i -> j and 0 when the edge is absent. Edges
 * are kept sorted by (src, dst). Self-loops, duplicate (src, dst) pairs and
 * negative or non-finite weights are rejected at construction. Immutable.
 */
class DiGraph {
 public:
  DiGraph(Index n, std::vector<Edge> edges, std::vector<std::string> labels = {})
      : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    require(n_ >= 1, "DiGraph: vertex count must be positive");
    if (!labels_.empty()) {
      require_same_size(static_cast<Index>(labels_.size()), n_, "DiGraph labels");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });
    weights_ = RMatrix::Zero(n_, n_);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      require(e.src >= 0 && e.src < n_ && e.dst >= 0 && e.dst < n_,
              "DiGraph: edge " + describe(e) + " has a vertex index out of range");
      require(e.src != e.dst, "DiGraph: self-loop at vertex " + std::to_string(e.src));
      require(std::isfinite(e.weight) && e.weight >= 0.0,
              "DiGraph: edge " + describe(e) + " has a negative or non-finite weight");
      if (k > 0 && edges_[k - 1].src == e.src && edges_[k - 1].dst == e.dst) {
        throw InvalidArgument("DiGraph: duplicate edge " + describe(e));
      }
      weights_(e.src, e.dst) = e.weight;
    }
  }

  [[nodiscard]] Index n() const { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const RMatrix& weights() const { return weights_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  // Degree conventions as written for the Hermitian Laplacian construction:
  // "in-degree" is the row sum of W and "out-degree" the column sum. Nothing
  // downstream uses them; the Laplacian only needs the symmetrized degrees.
  [[nodiscard]] double in_degree(Index i) const { return weights_.row(i).sum(); }
  [[nodiscard]] double out_degree(Index i) const { return weights_.col(i).sum(); }

 private:
  static std::string describe(const Edge& e) {
    return "(" + std::to_string(e.src) + " -> " + std::to_string(e.dst) + ")";
  }

  Index n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  RMatrix weights_;
};

/// Vertex-indexed signal. Entries must be finite.
struct GraphSignal {
  CVector values;
  std::string unit;

  GraphSignal() = default;
  explicit GraphSignal(CVector v, std::string u = {}) : values(std::move(v)), unit(std::move(u)) {
    require(all_finite(values), "GraphSignal: non-finite entry");
  }

  static GraphSignal real(const RVector& v, std::string u = {}) {
    return GraphSignal(v.cast<cplx>(), std::move(u));
  }

  [[nodiscard]] Index size() const { return values.size(); }

  [[nodiscard]] bool is_real() const {
    return std::all_of(values.data(), values.data() + values.size(),
                       [](const cplx& z) { return z.imag() == 0.0; });
  }
};

/// True iff W equals its transpose entrywise.
inline bool is_symmetric(const DiGraph& g) {
  const RMatrix& w = g.weights();
  for (Index i = 0; i < g.n(); ++i)
    for (Index j = i + 1; j < g.n(); ++j)
      if (w(i, j) != w(j, i)) return false;
  return true;
}

/// Same vertex set with every edge reversed.
inline DiGraph reversed(const DiGraph& g) {
  std::vector<Edge> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) out.push_back({e.dst, e.src, e.weight});
  return DiGraph(g.n(), std::move(out), g.labels());
}

/// Undirected version of g carried as a symmetric digraph with weights (w_ij + w_ji) / 2.
inline DiGraph symmetrized(const DiGraph& g) {
  const RMatrix& w = g.weights();
  std::vector<Edge> out;
  for (Index i = 0; i < g.n(); ++i) {
    for (Index j = 0; j < g.n(); ++j) {
      const double ws = 0.5 * (w(i, j) + w(j, i));
      if (i != j && ws != 0.0) out.push_back({i, j, ws});
    }
  }
  return DiGraph(g.n(), std::move(out), g.labels());
}

/**
 * Erdős–Rényi style digraph: each ordered pair (i, j), i != j, carries a
 * unit-weight edge i -> j with probability p. The pair (i, j) consumes
 * counter i * n + j of a CounterRng seeded with `seed`, so the result is a
 * pure function of (n, p, seed).
 */
inline DiGraph random_digraph(Index n, double p, std::uint64_t seed) {
  require(n >= 1, "random_digraph: n must be positive");
  require(p >= 0.0 && p <= 1.0, "random_digraph: p must lie in [0, 1]");
  const CounterRng rng(seed);
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto counter = static_cast<std::uint64_t>(i * n + j);
      if (rng.uniform_at(counter) < p) edges.push_back({i, j, 1.0});
    }
  }
  return DiGraph(n, std::move(edges));
}

}  // namespace dgfrft
