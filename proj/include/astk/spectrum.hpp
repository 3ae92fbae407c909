#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "astk/errors.hpp"
#include "astk/graph.hpp"
#include "astk/rng.hpp"

namespace astk {

struct SpectrumOptions {
  // full mode refuses graphs above this many nodes; extremes mode is O(M*k).
  std::size_t full_mode_limit = 3000;
  std::size_t extremes_k = 50;
};

struct SpectrumProfile {
  std::vector<double> eigenvalues;  // ascending
  bool complete = false;            // full spectrum vs. k smallest + k largest
};

namespace detail {

// y = L x for the normalized Laplacian L = I - D^{-1/2} A D^{-1/2}.
// Isolated nodes get a zero row (their diagonal convention is 0).
class NormalizedLaplacianOp {
 public:
  explicit NormalizedLaplacianOp(const Graph& g) : g_(g), inv_sqrt_deg_(g.node_count()) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      std::size_t d = g.degree(v);
      inv_sqrt_deg_[v] = d > 0 ? 1.0 / std::sqrt(static_cast<double>(d)) : 0.0;
    }
  }

  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    const std::size_t n = g_.node_count();
    for (NodeId v = 0; v < n; ++v) {
      double acc = 0.0;
      for (NodeId w : g_.neighbors(v)) acc += inv_sqrt_deg_[w] * x[w];
      y[v] = (g_.degree(v) > 0 ? x[v] : 0.0) - inv_sqrt_deg_[v] * acc;
    }
  }

  double inv_sqrt_degree(NodeId v) const { return inv_sqrt_deg_[v]; }

 private:
  const Graph& g_;
  std::vector<double> inv_sqrt_deg_;
};

inline Eigen::MatrixXd normalized_laplacian_dense(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  NormalizedLaplacianOp op(g);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > 0) lap(v, v) = 1.0;
    for (NodeId w : g.neighbors(v))
      lap(v, w) = -op.inv_sqrt_degree(v) * op.inv_sqrt_degree(w);
  }
  return lap;
}

// Lanczos with full reorthogonalization; extreme Ritz values converge first,
// which is all the extremes mode needs.
inline std::vector<double> lanczos_extremes(const Graph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  NormalizedLaplacianOp op(g);
  const std::size_t m = std::min(n, std::max<std::size_t>(2 * k + 60, 120));
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(m);
  Eigen::VectorXd v(n), w(n);
  Rng rng(0x5EEDF00Dull);  // fixed start vector keeps output deterministic
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.next_double() - 0.5;
  v.normalize();
  std::vector<double> alpha, beta;
  for (std::size_t j = 0; j < m; ++j) {
    basis.push_back(v);
    op.apply(v, w);
    double a = v.dot(w);
    alpha.push_back(a);
    w -= a * v;
    if (j > 0) w -= beta.back() * basis[j - 1];
    // Full reorthogonalization, twice.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w -= q.dot(w) * q;
    double b = w.norm();
    if (b < 1e-12 || j + 1 == m) break;
    beta.push_back(b);
    v = w / b;
  }
  const auto steps = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
  for (Eigen::Index i = 0; i < steps; ++i) {
    tri(i, i) = alpha[i];
    if (i + 1 < steps) tri(i, i + 1) = tri(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri, Eigen::EigenvaluesOnly);
  std::vector<double> ritz(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + steps);
  if (ritz.size() <= 2 * k) return ritz;
  std::vector<double> out(ritz.begin(), ritz.begin() + k);
  out.insert(out.end(), ritz.end() - static_cast<std::ptrdiff_t>(k), ritz.end());
  return out;
}

}  // namespace detail

enum class SpectrumMode { kFull, kExtremes };

inline SpectrumProfile normalized_laplacian_spectrum(const Graph& g,
                                                     SpectrumMode mode = SpectrumMode::kFull,
                                                     const SpectrumOptions& opts = {}) {
  if (g.node_count() < 2) throw ConfigError("spectrum: graph must have at least 2 nodes");
  SpectrumProfile out;
  if (mode == SpectrumMode::kFull && g.node_count() > opts.full_mode_limit)
    throw SizeLimitError("spectrum: " + std::to_string(g.node_count()) +
                         " nodes exceeds the full-mode limit of " +
                         std::to_string(opts.full_mode_limit) + "; use extremes mode");
  if (mode == SpectrumMode::kFull || g.node_count() <= 2 * opts.extremes_k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        detail::normalized_laplacian_dense(g), Eigen::EigenvaluesOnly);
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + g.node_count());
    out.complete = true;
  } else {
    out.eigenvalues = detail::lanczos_extremes(g, opts.extremes_k);
    out.complete = false;
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

}  // namespace astk
