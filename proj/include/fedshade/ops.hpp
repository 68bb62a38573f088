#pragma once

#include <functional>
#include <span>

#include "fedshade/param_vector.hpp"
#include "fedshade/tensor.hpp"

namespace fedshade {

// 3x3 cross-correlation, stride 1, zero padding 1. Output spatial size
// equals input spatial size.
Tensor conv2d_forward(const Tensor& input, const Tensor& weight, const Tensor& bias);

struct Conv2dGrads {
  Tensor input;
  Tensor weight;
  Tensor bias;
};

// Exact gradients of conv2d_forward with respect to input, weight and bias.
Conv2dGrads conv2d_backward(const Tensor& grad_out, const Tensor& input,
                            const Tensor& weight);

// Elementwise max(0, x); the subgradient at 0 is taken as 0.
Tensor relu_forward(const Tensor& x);
Tensor relu_backward(const Tensor& grad_out, const Tensor& x);

// Mean squared error over all elements, with gradient 2 (pred - target) / N.
double mse_loss(const Tensor& pred, const Tensor& target);
Tensor mse_loss_backward(const Tensor& pred, const Tensor& target);

// params - lr * grads; layouts must match.
ParamVector sgd_step(const ParamVector& params, const ParamVector& grads, double lr);

// Central finite differences of a scalar evaluation against an analytic
// gradient, over the given coordinate subset. Returns the maximum relative
// error max |fd - an| / max(|fd|, |an|, 1e-8).
double grad_check(const std::function<double(const ParamVector&)>& eval,
                  const ParamVector& params, const ParamVector& analytic,
                  double epsilon, std::span<const std::size_t> coords);

}  // namespace fedshade
