#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fedshade {

// Dense row-major tensor of 64-bit reals. Rank is dynamic but the network
// code only ever builds rank-1 (bias), rank-3 (C,H,W activations) and
// rank-4 (Cout,Cin,Kh,Kw weights) tensors.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;

  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    data.assign(numel_of(shape), 0.0);
  }

  static std::size_t numel_of(const std::vector<int>& s) {
    std::size_t n = 1;
    for (int d : s) {
      if (d <= 0) throw std::invalid_argument("Tensor: non-positive dimension");
      n *= static_cast<std::size_t>(d);
    }
    return n;
  }

  std::size_t numel() const { return data.size(); }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  // Rank-3 accessors (c, h, w).
  double& at(int c, int h, int w) {
    return data[(static_cast<std::size_t>(c) * shape[1] + h) * shape[2] + w];
  }
  double at(int c, int h, int w) const {
    return data[(static_cast<std::size_t>(c) * shape[1] + h) * shape[2] + w];
  }

  // Rank-4 accessors (co, ci, kh, kw).
  double& at(int co, int ci, int kh, int kw) {
    return data[((static_cast<std::size_t>(co) * shape[1] + ci) * shape[2] + kh) * shape[3] + kw];
  }
  double at(int co, int ci, int kh, int kw) const {
    return data[((static_cast<std::size_t>(co) * shape[1] + ci) * shape[2] + kh) * shape[3] + kw];
  }
};

}  // namespace fedshade
