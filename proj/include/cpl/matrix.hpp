#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cpl {

// Dense row-major matrix of doubles. Rows are frames throughout this
// project: logits and log-prob matrices are T x V, feature matrices T x d.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

  double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

using FeatureMatrix = Matrix;  // T_in x d
using LogitsMatrix = Matrix;   // T x V, unnormalized

inline bool all_finite(const Matrix& m) {
  for (double v : m.data)
    if (!std::isfinite(v)) return false;
  return true;
}

inline double log_sum_exp(const double* v, int n) {
  double mx = v[0];
  for (int i = 1; i < n; ++i) mx = std::max(mx, v[i]);
  if (!std::isfinite(mx)) return mx;  // all -inf stays -inf
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::exp(v[i] - mx);
  return mx + std::log(s);
}

inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double mx = std::max(a, b);
  return mx + std::log(std::exp(a - mx) + std::exp(b - mx));
}

// Row-wise log-softmax: out[t, w] = z[t, w] - logsumexp_w z[t, w].
inline Matrix log_softmax(const Matrix& logits) {
  Matrix out(logits.rows, logits.cols);
  for (int t = 0; t < logits.rows; ++t) {
    const double lse = log_sum_exp(logits.row(t), logits.cols);
    for (int w = 0; w < logits.cols; ++w) out(t, w) = logits(t, w) - lse;
  }
  return out;
}

// Row-wise softmax with optional temperature (probabilities of z / tau).
inline Matrix softmax(const Matrix& logits, double tau = 1.0) {
  Matrix out(logits.rows, logits.cols);
  for (int t = 0; t < logits.rows; ++t) {
    double mx = logits(t, 0);
    for (int w = 1; w < logits.cols; ++w) mx = std::max(mx, logits(t, w));
    double s = 0.0;
    for (int w = 0; w < logits.cols; ++w) {
      const double e = std::exp((logits(t, w) - mx) / tau);
      out(t, w) = e;
      s += e;
    }
    for (int w = 0; w < logits.cols; ++w) out(t, w) /= s;
  }
  return out;
}

}  // namespace cpl
