#include "fedshade/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fedshade {

namespace {

void check_conv_shapes(const Tensor& input, const Tensor& weight, const Tensor* bias) {
  if (input.shape.size() != 3) throw std::invalid_argument("conv2d: input must be rank 3");
  if (weight.shape.size() != 4) throw std::invalid_argument("conv2d: weight must be rank 4");
  if (weight.shape[2] != 3 || weight.shape[3] != 3)
    throw std::invalid_argument("conv2d: kernel must be 3x3");
  if (weight.shape[1] != input.shape[0])
    throw std::invalid_argument("conv2d: channel mismatch between input and weight");
  if (bias != nullptr) {
    if (bias->shape.size() != 1 || bias->shape[0] != weight.shape[0])
      throw std::invalid_argument("conv2d: bias shape mismatch");
  }
}

}  // namespace

Tensor conv2d_forward(const Tensor& input, const Tensor& weight, const Tensor& bias) {
  check_conv_shapes(input, weight, &bias);
  const int c_in = input.shape[0];
  const int height = input.shape[1];
  const int width = input.shape[2];
  const int c_out = weight.shape[0];

  Tensor out({c_out, height, width});
  for (int co = 0; co < c_out; ++co) {
    for (int h = 0; h < height; ++h) {
      for (int w = 0; w < width; ++w) {
        double acc = bias.data[co];
        for (int ci = 0; ci < c_in; ++ci) {
          for (int kh = 0; kh < 3; ++kh) {
            const int ih = h + kh - 1;
            if (ih < 0 || ih >= height) continue;
            for (int kw = 0; kw < 3; ++kw) {
              const int iw = w + kw - 1;
              if (iw < 0 || iw >= width) continue;
              acc += weight.at(co, ci, kh, kw) * input.at(ci, ih, iw);
            }
          }
        }
        out.at(co, h, w) = acc;
      }
    }
  }
  return out;
}

Conv2dGrads conv2d_backward(const Tensor& grad_out, const Tensor& input,
                            const Tensor& weight) {
  check_conv_shapes(input, weight, nullptr);
  const int c_in = input.shape[0];
  const int height = input.shape[1];
  const int width = input.shape[2];
  const int c_out = weight.shape[0];
  if (grad_out.shape != std::vector<int>{c_out, height, width})
    throw std::invalid_argument("conv2d_backward: grad_out shape mismatch");

  Conv2dGrads grads;
  grads.input = Tensor({c_in, height, width});
  grads.weight = Tensor({c_out, c_in, 3, 3});
  grads.bias = Tensor({c_out});

  for (int co = 0; co < c_out; ++co) {
    for (int h = 0; h < height; ++h) {
      for (int w = 0; w < width; ++w) {
        const double g = grad_out.at(co, h, w);
        if (g == 0.0) continue;
        grads.bias.data[co] += g;
        for (int ci = 0; ci < c_in; ++ci) {
          for (int kh = 0; kh < 3; ++kh) {
            const int ih = h + kh - 1;
            if (ih < 0 || ih >= height) continue;
            for (int kw = 0; kw < 3; ++kw) {
              const int iw = w + kw - 1;
              if (iw < 0 || iw >= width) continue;
              grads.weight.at(co, ci, kh, kw) += g * input.at(ci, ih, iw);
              grads.input.at(ci, ih, iw) += g * weight.at(co, ci, kh, kw);
            }
          }
        }
      }
    }
  }
  return grads;
}

Tensor relu_forward(const Tensor& x) {
  Tensor out = x;
  for (double& v : out.data) v = std::max(0.0, v);
  return out;
}

Tensor relu_backward(const Tensor& grad_out, const Tensor& x) {
  if (!grad_out.same_shape(x))
    throw std::invalid_argument("relu_backward: shape mismatch");
  Tensor out = grad_out;
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    if (x.data[i] <= 0.0) out.data[i] = 0.0;
  }
  return out;
}

double mse_loss(const Tensor& pred, const Tensor& target) {
  if (!pred.same_shape(target)) throw std::invalid_argument("mse_loss: shape mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.data.size(); ++i) {
    const double diff = pred.data[i] - target.data[i];
    sum += diff * diff;
  }
  return sum / static_cast<double>(pred.data.size());
}

Tensor mse_loss_backward(const Tensor& pred, const Tensor& target) {
  if (!pred.same_shape(target))
    throw std::invalid_argument("mse_loss_backward: shape mismatch");
  Tensor grad = pred;
  const double scale = 2.0 / static_cast<double>(pred.data.size());
  for (std::size_t i = 0; i < grad.data.size(); ++i) {
    grad.data[i] = scale * (pred.data[i] - target.data[i]);
  }
  return grad;
}

ParamVector sgd_step(const ParamVector& params, const ParamVector& grads, double lr) {
  if (!params.same_layout(grads))
    throw std::invalid_argument("sgd_step: layout mismatch");
  ParamVector out = params;
  out.add_scaled(grads, -lr);
  return out;
}

double grad_check(const std::function<double(const ParamVector&)>& eval,
                  const ParamVector& params, const ParamVector& analytic,
                  double epsilon, std::span<const std::size_t> coords) {
  if (epsilon <= 0.0) throw std::invalid_argument("grad_check: epsilon must be positive");
  if (params.size() != analytic.size())
    throw std::invalid_argument("grad_check: gradient size mismatch");

  ParamVector probe = params;
  double worst = 0.0;
  for (std::size_t idx : coords) {
    const double orig = probe[idx];
    probe[idx] = orig + epsilon;
    const double up = eval(probe);
    probe[idx] = orig - epsilon;
    const double down = eval(probe);
    probe[idx] = orig;
    const double fd = (up - down) / (2.0 * epsilon);
    const double an = analytic[idx];
    const double scale = std::max({std::abs(fd), std::abs(an), 1e-8});
    worst = std::max(worst, std::abs(fd - an) / scale);
  }
  return worst;
}

}  // namespace fedshade
