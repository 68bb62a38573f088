#pragma once

#include <span>
#include <vector>

#include "fedshade/param_vector.hpp"
#include "fedshade/rng.hpp"

namespace fedshade {

// Two-layer perceptron: linear -> tanh -> linear. Small enough that the
// allocator, the proxy attacker and the evaluation attacker all share it.
class Mlp {
 public:
  Mlp(int inputs, int hidden, int outputs);

  int inputs() const { return inputs_; }
  int hidden() const { return hidden_; }
  int outputs() const { return outputs_; }
  const std::shared_ptr<const ParamLayout>& layout() const { return layout_; }

  ParamVector zero_params() const { return ParamVector(layout_); }

  // Weights uniform in [-sqrt(1/fan_in), sqrt(1/fan_in)], biases zero.
  ParamVector init_params(RngStream& rng) const;

  struct Cache {
    std::vector<double> input;
    std::vector<double> hidden_pre;
    std::vector<double> hidden_act;
  };

  std::vector<double> forward(const ParamVector& params, std::span<const double> x,
                              Cache* cache = nullptr) const;

  // Backpropagates grad_y; accumulates into grad_params (if non-null) and
  // writes the input gradient into grad_x (if non-null).
  void backward(const ParamVector& params, const Cache& cache,
                std::span<const double> grad_y, ParamVector* grad_params,
                std::vector<double>* grad_x) const;

 private:
  int inputs_;
  int hidden_;
  int outputs_;
  std::shared_ptr<const ParamLayout> layout_;
};

}  // namespace fedshade
