#include "fedshade/param_vector.hpp"

#include <cmath>
#include <stdexcept>

#include "fedshade/tensor.hpp"

namespace fedshade {

std::shared_ptr<const ParamLayout> make_layout(
    const std::vector<std::pair<std::string, std::vector<int>>>& specs) {
  auto layout = std::make_shared<ParamLayout>();
  std::size_t offset = 0;
  for (const auto& [name, shape] : specs) {
    Segment seg;
    seg.name = name;
    seg.shape = shape;
    seg.offset = offset;
    seg.size = Tensor::numel_of(shape);
    offset += seg.size;
    layout->push_back(std::move(seg));
  }
  return layout;
}

std::size_t layout_size(const ParamLayout& layout) {
  if (layout.empty()) return 0;
  return layout.back().offset + layout.back().size;
}

ParamVector::ParamVector(std::shared_ptr<const ParamLayout> layout)
    : layout_(std::move(layout)), data_(layout_ ? layout_size(*layout_) : 0, 0.0) {}

const Segment& ParamVector::find_segment(std::string_view name) const {
  for (const Segment& seg : *layout_) {
    if (seg.name == name) return seg;
  }
  throw std::invalid_argument("ParamVector: unknown segment '" + std::string(name) + "'");
}

std::span<double> ParamVector::segment(std::string_view name) {
  const Segment& seg = find_segment(name);
  return {data_.data() + seg.offset, seg.size};
}

std::span<const double> ParamVector::segment(std::string_view name) const {
  const Segment& seg = find_segment(name);
  return {data_.data() + seg.offset, seg.size};
}

bool ParamVector::same_layout(const ParamVector& other) const {
  if (layout_ == other.layout_) return true;
  if (!layout_ || !other.layout_) return false;
  if (layout_->size() != other.layout_->size()) return false;
  for (std::size_t i = 0; i < layout_->size(); ++i) {
    const Segment& a = (*layout_)[i];
    const Segment& b = (*other.layout_)[i];
    if (a.name != b.name || a.shape != b.shape || a.offset != b.offset) return false;
  }
  return true;
}

double ParamVector::l2_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

double ParamVector::dot(const ParamVector& other) const {
  if (data_.size() != other.data_.size())
    throw std::invalid_argument("ParamVector::dot: size mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) sum += data_[i] * other.data_[i];
  return sum;
}

void ParamVector::fill(double value) {
  for (double& v : data_) v = value;
}

void ParamVector::scale(double factor) {
  for (double& v : data_) v *= factor;
}

void ParamVector::add_scaled(const ParamVector& other, double factor) {
  if (data_.size() != other.data_.size())
    throw std::invalid_argument("ParamVector::add_scaled: size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += factor * other.data_[i];
}

}  // namespace fedshade
