#pragma once

#include <cmath>
#include <vector>

#include "cpl/error.hpp"
#include "cpl/model.hpp"

namespace cpl {

// Adagrad: accum += g^2; theta -= lr * g / (sqrt(accum) + eps).
// Accumulators are non-negative and monotone non-decreasing.
struct Adagrad {
  double lr = 0.05;
  double eps = 1e-10;
  std::vector<double> accum;

  void reset(std::size_t n) { accum.assign(n, 0.0); }

  void step(ModelParams& params, const std::vector<double>& grad) {
    if (accum.size() != params.flat.size()) accum.assign(params.flat.size(), 0.0);
    if (grad.size() != params.flat.size()) throw ConfigError("gradient size mismatch");
    for (std::size_t i = 0; i < grad.size(); ++i) {
      const double g = grad[i];
      accum[i] += g * g;
      params.flat[i] -= lr * g / (std::sqrt(accum[i]) + eps);
    }
  }
};

// Exponential moving average of the parameters:
// shadow <- decay * shadow + (1 - decay) * params.
struct EmaParams {
  double decay = 0.999;
  std::vector<double> shadow;

  void init_from(const ModelParams& params) { shadow = params.flat; }

  void update(const ModelParams& params) {
    if (shadow.size() != params.flat.size()) {
      shadow = params.flat;
      return;
    }
    for (std::size_t i = 0; i < shadow.size(); ++i)
      shadow[i] = decay * shadow[i] + (1.0 - decay) * params.flat[i];
  }

  ModelParams materialize(const ModelConfig& cfg) const {
    ModelParams p;
    p.cfg = cfg;
    p.flat = shadow;
    return p;
  }
};

}  // namespace cpl
