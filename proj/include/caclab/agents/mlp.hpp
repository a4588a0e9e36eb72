#pragma once

#include <vector>

#include "caclab/core/rng.hpp"

namespace caclab::agents {

// Two-layer fully connected network with rectifier hidden units, double
// precision throughout so gradients can be checked against finite
// differences tightly.
class Mlp {
 public:
  Mlp() = default;
  Mlp(int inputs, int hidden, int outputs, Rng& rng);

  int inputs() const { return in_; }
  int outputs() const { return out_; }

  std::vector<double> forward(const std::vector<double>& x) const;

  struct Grads {
    std::vector<double> w1, b1, w2, b2;
  };
  Grads zero_grads() const;

  // Accumulates parameter gradients for one input given dL/d(output).
  void backward(const std::vector<double>& x, const std::vector<double>& dout,
                Grads& grads) const;

  // Flat parameter access (w1, b1, w2, b2 order) for the optimizer and for
  // finite-difference tests.
  std::size_t num_params() const;
  double get_param(std::size_t i) const;
  void set_param(std::size_t i, double v);
  static double grad_param(const Grads& g, std::size_t i, const Mlp& shape);

  void apply(const Grads& grads, const std::vector<double>& scaled_step);

  std::vector<double> w1, b1, w2, b2;  // w1: hidden x in, w2: out x hidden

 private:
  int in_ = 0, hidden_ = 0, out_ = 0;

  std::vector<double> hidden_pre(const std::vector<double>& x) const;
};

// Adaptive-moment optimizer over an Mlp's parameters.
class Adam {
 public:
  Adam() = default;
  Adam(std::size_t num_params, double lr) : lr_(lr), m_(num_params, 0.0), v_(num_params, 0.0) {}

  void step(Mlp& net, const Mlp::Grads& grads);

 private:
  double lr_ = 1e-3;
  double beta1_ = 0.9, beta2_ = 0.999, eps_ = 1e-8;
  long t_ = 0;
  std::vector<double> m_, v_;
};

}  // namespace caclab::agents
