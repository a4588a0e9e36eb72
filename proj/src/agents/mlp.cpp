#include "caclab/agents/mlp.hpp"

#include <cmath>

#include "caclab/core/check.hpp"

namespace caclab::agents {

Mlp::Mlp(int inputs, int hidden, int outputs, Rng& rng)
    : in_(inputs), hidden_(hidden), out_(outputs) {
  w1.resize(static_cast<std::size_t>(hidden) * inputs);
  b1.assign(hidden, 0.0);
  w2.resize(static_cast<std::size_t>(outputs) * hidden);
  b2.assign(outputs, 0.0);
  double s1 = std::sqrt(2.0 / inputs);
  double s2 = std::sqrt(2.0 / hidden);
  for (double& w : w1) w = s1 * rng.gaussian();
  for (double& w : w2) w = s2 * rng.gaussian();
}

std::vector<double> Mlp::hidden_pre(const std::vector<double>& x) const {
  std::vector<double> h(hidden_);
  for (int j = 0; j < hidden_; ++j) {
    double acc = b1[j];
    const double* row = &w1[static_cast<std::size_t>(j) * in_];
    for (int i = 0; i < in_; ++i) acc += row[i] * x[i];
    h[j] = acc;
  }
  return h;
}

std::vector<double> Mlp::forward(const std::vector<double>& x) const {
  CACLAB_CHECK(static_cast<int>(x.size()) == in_, "input width mismatch");
  std::vector<double> h = hidden_pre(x);
  for (double& v : h) v = v > 0 ? v : 0.0;
  std::vector<double> out(out_);
  for (int k = 0; k < out_; ++k) {
    double acc = b2[k];
    const double* row = &w2[static_cast<std::size_t>(k) * hidden_];
    for (int j = 0; j < hidden_; ++j) acc += row[j] * h[j];
    out[k] = acc;
  }
  return out;
}

Mlp::Grads Mlp::zero_grads() const {
  Grads g;
  g.w1.assign(w1.size(), 0.0);
  g.b1.assign(b1.size(), 0.0);
  g.w2.assign(w2.size(), 0.0);
  g.b2.assign(b2.size(), 0.0);
  return g;
}

void Mlp::backward(const std::vector<double>& x, const std::vector<double>& dout,
                   Grads& grads) const {
  std::vector<double> pre = hidden_pre(x);
  std::vector<double> h(pre.size());
  for (std::size_t j = 0; j < pre.size(); ++j) h[j] = pre[j] > 0 ? pre[j] : 0.0;

  std::vector<double> dh(hidden_, 0.0);
  for (int k = 0; k < out_; ++k) {
    double d = dout[k];
    if (d == 0.0) continue;
    grads.b2[k] += d;
    double* gw = &grads.w2[static_cast<std::size_t>(k) * hidden_];
    const double* w = &w2[static_cast<std::size_t>(k) * hidden_];
    for (int j = 0; j < hidden_; ++j) {
      gw[j] += d * h[j];
      dh[j] += d * w[j];
    }
  }
  for (int j = 0; j < hidden_; ++j) {
    if (pre[j] <= 0) continue;  // rectifier gate
    grads.b1[j] += dh[j];
    double* gw = &grads.w1[static_cast<std::size_t>(j) * in_];
    for (int i = 0; i < in_; ++i) gw[i] += dh[j] * x[i];
  }
}

std::size_t Mlp::num_params() const {
  return w1.size() + b1.size() + w2.size() + b2.size();
}

double Mlp::get_param(std::size_t i) const {
  if (i < w1.size()) return w1[i];
  i -= w1.size();
  if (i < b1.size()) return b1[i];
  i -= b1.size();
  if (i < w2.size()) return w2[i];
  i -= w2.size();
  return b2[i];
}

void Mlp::set_param(std::size_t i, double v) {
  if (i < w1.size()) {
    w1[i] = v;
    return;
  }
  i -= w1.size();
  if (i < b1.size()) {
    b1[i] = v;
    return;
  }
  i -= b1.size();
  if (i < w2.size()) {
    w2[i] = v;
    return;
  }
  i -= w2.size();
  b2[i] = v;
}

double Mlp::grad_param(const Grads& g, std::size_t i, const Mlp&) {
  if (i < g.w1.size()) return g.w1[i];
  i -= g.w1.size();
  if (i < g.b1.size()) return g.b1[i];
  i -= g.b1.size();
  if (i < g.w2.size()) return g.w2[i];
  i -= g.w2.size();
  return g.b2[i];
}

void Adam::step(Mlp& net, const Mlp::Grads& grads) {
  ++t_;
  double bc1 = 1.0 - std::pow(beta1_, t_);
  double bc2 = 1.0 - std::pow(beta2_, t_);
  std::size_t n = net.num_params();
  for (std::size_t i = 0; i < n; ++i) {
    double g = Mlp::grad_param(grads, i, net);
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * g;
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * g * g;
    double update = lr_ * (m_[i] / bc1) / (std::sqrt(v_[i] / bc2) + eps_);
    net.set_param(i, net.get_param(i) - update);
  }
}

}  // namespace caclab::agents
