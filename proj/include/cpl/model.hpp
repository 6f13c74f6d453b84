#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cpl/error.hpp"
#include "cpl/matrix.hpp"
#include "cpl/rng.hpp"

namespace cpl {

// Per-frame acoustic model: a feedforward net over a stacked context window
// of input frames. Stride is 1, so the output has exactly T_in rows. Each
// hidden layer is tanh with optional inverted dropout; the output layer is
// linear and emits one logit row per frame.
struct ModelConfig {
  int feature_dim = 8;
  int vocab = 12;
  int context = 2;                  // half window; stacked input is (2*context+1)*feature_dim
  std::vector<int> hidden = {64, 64};

  int input_dim() const { return (2 * context + 1) * feature_dim; }
  int num_layers() const { return static_cast<int>(hidden.size()) + 1; }

  int layer_in(int l) const { return l == 0 ? input_dim() : hidden[l - 1]; }
  int layer_out(int l) const {
    return l == static_cast<int>(hidden.size()) ? vocab : hidden[l];
  }
};

// Parameters live in one flat vector so the optimizer, EMA tracking and
// finite-difference checks can treat them uniformly. Layout per layer l:
// weights (out x in, row-major) followed by bias (out).
struct ModelParams {
  ModelConfig cfg;
  std::vector<double> flat;

  static ModelParams zeros(const ModelConfig& cfg) {
    ModelParams p;
    p.cfg = cfg;
    std::size_t n = 0;
    for (int l = 0; l < cfg.num_layers(); ++l)
      n += static_cast<std::size_t>(cfg.layer_out(l)) * cfg.layer_in(l) + cfg.layer_out(l);
    p.flat.assign(n, 0.0);
    return p;
  }

  std::size_t weight_offset(int layer) const {
    std::size_t off = 0;
    for (int l = 0; l < layer; ++l)
      off += static_cast<std::size_t>(cfg.layer_out(l)) * cfg.layer_in(l) + cfg.layer_out(l);
    return off;
  }
  std::size_t bias_offset(int layer) const {
    return weight_offset(layer) +
           static_cast<std::size_t>(cfg.layer_out(layer)) * cfg.layer_in(layer);
  }

  const double* weights(int layer) const { return flat.data() + weight_offset(layer); }
  double* weights(int layer) { return flat.data() + weight_offset(layer); }
  const double* bias(int layer) const { return flat.data() + bias_offset(layer); }
  double* bias(int layer) { return flat.data() + bias_offset(layer); }
};

// Gaussian init scaled by 1/sqrt(fan_in); biases zero. Consumes one
// normal() per weight, layer by layer.
inline void init_params(ModelParams& p, Rng& rng) {
  const ModelConfig& cfg = p.cfg;
  for (int l = 0; l < cfg.num_layers(); ++l) {
    const int in = cfg.layer_in(l), out = cfg.layer_out(l);
    const double scale = 1.0 / std::sqrt(static_cast<double>(in));
    double* w = p.weights(l);
    for (int i = 0; i < out * in; ++i) w[i] = scale * rng.normal();
    double* b = p.bias(l);
    for (int i = 0; i < out; ++i) b[i] = 0.0;
  }
}

// Activations recorded by a forward pass; required for backward. tanh_out
// holds hidden activations before dropout, mask the dropout scale factors
// (1/(1-rate) or 0; all-ones when dropout was off).
struct ForwardTape {
  Matrix stacked;                 // T x input_dim
  std::vector<Matrix> tanh_out;   // per hidden layer, T x hidden[l]
  std::vector<Matrix> mask;
};

// Runs the net over every frame. dropout_rate > 0 requires an rng and draws
// one uniform per hidden unit per frame, layer by layer within each frame.
// With dropout_rate == 0 no randomness is consumed and the result is a pure
// function of (params, features).
inline LogitsMatrix forward(const ModelParams& params, const FeatureMatrix& features,
                            double dropout_rate = 0.0, Rng* rng = nullptr,
                            ForwardTape* tape = nullptr) {
  const ModelConfig& cfg = params.cfg;
  if (features.cols != cfg.feature_dim)
    throw ConfigError("feature dim " + std::to_string(features.cols) +
                      " does not match model feature dim " + std::to_string(cfg.feature_dim));
  if (dropout_rate < 0.0 || dropout_rate > 1.0) throw ConfigError("dropout rate outside [0,1]");
  if (dropout_rate > 0.0 && rng == nullptr) throw ConfigError("dropout requires an rng");

  const int T = features.rows;
  const int in0 = cfg.input_dim();
  const int window = 2 * cfg.context + 1;
  const int nhidden = static_cast<int>(cfg.hidden.size());

  Matrix stacked(T, in0);
  for (int t = 0; t < T; ++t) {
    double* dst = stacked.row(t);
    for (int k = 0; k < window; ++k) {
      const int src = t - cfg.context + k;
      if (src >= 0 && src < T) {
        const double* f = features.row(src);
        for (int j = 0; j < cfg.feature_dim; ++j) dst[k * cfg.feature_dim + j] = f[j];
      }
      // frames outside [0, T) stay zero-padded
    }
  }

  ForwardTape local;
  ForwardTape& tp = tape ? *tape : local;
  tp.tanh_out.assign(nhidden, Matrix());
  tp.mask.assign(nhidden, Matrix());
  for (int l = 0; l < nhidden; ++l) {
    tp.tanh_out[l] = Matrix(T, cfg.hidden[l]);
    tp.mask[l] = Matrix(T, cfg.hidden[l], 1.0);
  }

  const double keep = 1.0 - dropout_rate;
  LogitsMatrix logits(T, cfg.vocab);
  std::vector<double> h;
  for (int t = 0; t < T; ++t) {
    const double* x = stacked.row(t);
    int in = in0;
    for (int l = 0; l < cfg.num_layers(); ++l) {
      const int out = cfg.layer_out(l);
      const double* w = params.weights(l);
      const double* b = params.bias(l);
      double* dst = (l == nhidden) ? logits.row(t) : tp.tanh_out[l].row(t);
      for (int o = 0; o < out; ++o) {
        const double* wrow = w + static_cast<std::size_t>(o) * in;
        double a = b[o];
        for (int i = 0; i < in; ++i) a += wrow[i] * x[i];
        dst[o] = (l == nhidden) ? a : std::tanh(a);
      }
      if (l < nhidden) {
        double* m = tp.mask[l].row(t);
        if (dropout_rate > 0.0) {
          for (int o = 0; o < out; ++o)
            m[o] = (rng->uniform() < dropout_rate) ? 0.0 : 1.0 / keep;
        }
        h.resize(out);
        for (int o = 0; o < out; ++o) h[o] = dst[o] * m[o];
        x = h.data();
        in = out;
      }
    }
  }
  if (tape) tape->stacked = std::move(stacked);
  return logits;
}

// Gradient of sum_{t,w} d_logits[t,w] * logits[t,w] with respect to every
// parameter, given the tape of the forward pass that produced the logits.
// Linear in d_logits.
inline std::vector<double> backward(const ModelParams& params, const ForwardTape& tape,
                                    const Matrix& d_logits) {
  const ModelConfig& cfg = params.cfg;
  const int T = tape.stacked.rows;
  if (d_logits.rows != T || d_logits.cols != cfg.vocab)
    throw ConfigError("d_logits shape does not match forward output");
  const int nhidden = static_cast<int>(cfg.hidden.size());

  std::vector<double> grad(params.flat.size(), 0.0);
  std::vector<double> delta, next;
  std::vector<double> hin;
  for (int t = 0; t < T; ++t) {
    delta.assign(d_logits.row(t), d_logits.row(t) + cfg.vocab);
    for (int l = cfg.num_layers() - 1; l >= 0; --l) {
      const int in = cfg.layer_in(l), out = cfg.layer_out(l);
      // input to this layer at frame t (post-dropout hidden or stacked row)
      const double* x;
      if (l == 0) {
        x = tape.stacked.row(t);
      } else {
        const double* y = tape.tanh_out[l - 1].row(t);
        const double* m = tape.mask[l - 1].row(t);
        hin.resize(in);
        for (int i = 0; i < in; ++i) hin[i] = y[i] * m[i];
        x = hin.data();
      }
      double* gw = grad.data() + params.weight_offset(l);
      double* gb = grad.data() + params.bias_offset(l);
      const double* w = params.weights(l);
      if (l > 0) next.assign(in, 0.0);
      for (int o = 0; o < out; ++o) {
        const double d = delta[o];
        gb[o] += d;
        double* gwrow = gw + static_cast<std::size_t>(o) * in;
        const double* wrow = w + static_cast<std::size_t>(o) * in;
        for (int i = 0; i < in; ++i) {
          gwrow[i] += d * x[i];
          if (l > 0) next[i] += d * wrow[i];
        }
      }
      if (l > 0) {
        const double* y = tape.tanh_out[l - 1].row(t);
        const double* m = tape.mask[l - 1].row(t);
        delta.resize(in);
        for (int i = 0; i < in; ++i) delta[i] = next[i] * m[i] * (1.0 - y[i] * y[i]);
      }
    }
  }
  return grad;
}

}  // namespace cpl
