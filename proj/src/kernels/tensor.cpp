#include "orpose/kernels/tensor.hpp"

#include <algorithm>

#include "orpose/util/error.hpp"

namespace orpose {

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  if (shape_.empty() || shape_.size() > 4) throw InvalidInput("Tensor: rank must be 1..4");
  std::size_t n = 1;
  for (int d : shape_) {
    if (d <= 0) throw InvalidInput("Tensor: dimensions must be positive");
    n *= static_cast<std::size_t>(d);
  }
  data_.assign(n, 0.0);
}

void Tensor::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

}  // namespace orpose
