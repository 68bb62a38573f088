#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fedshade {

// One named contiguous slice of a flat parameter array.
struct Segment {
  std::string name;
  std::vector<int> shape;
  std::size_t offset = 0;
  std::size_t size = 0;
};

using ParamLayout = std::vector<Segment>;

// Builds a layout from (name, shape) pairs. Offsets are assigned
// sequentially, so segments are contiguous, non-overlapping and cover the
// whole array by construction.
std::shared_ptr<const ParamLayout> make_layout(
    const std::vector<std::pair<std::string, std::vector<int>>>& specs);

std::size_t layout_size(const ParamLayout& layout);

// Flat vector of 64-bit reals with a shared, immutable layout descriptor.
// Copies are cheap on the layout side (shared_ptr) and deep on the data.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::shared_ptr<const ParamLayout> layout);

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  const std::shared_ptr<const ParamLayout>& layout() const { return layout_; }
  const Segment& find_segment(std::string_view name) const;
  std::span<double> segment(std::string_view name);
  std::span<const double> segment(std::string_view name) const;

  // Layouts compare equal when they are the same object or structurally
  // identical; in-process code always shares the pointer.
  bool same_layout(const ParamVector& other) const;

  double l2_norm() const;
  double dot(const ParamVector& other) const;

  void fill(double value);
  void scale(double factor);
  void add_scaled(const ParamVector& other, double factor);  // this += factor * other

 private:
  std::shared_ptr<const ParamLayout> layout_;
  std::vector<double> data_;
};

}  // namespace fedshade
