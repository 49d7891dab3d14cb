#pragma once

#include <cstddef>
#include <vector>

namespace orpose {

// Dense row-major double tensor, rank 1..4. Double precision throughout the
// training stack so analytic gradients can be checked against central finite
// differences at 1e-3 relative tolerance.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return data_.size(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator()(int a) { return data_[static_cast<std::size_t>(a)]; }
  double operator()(int a) const { return data_[static_cast<std::size_t>(a)]; }
  double& operator()(int a, int b) { return data_[static_cast<std::size_t>(a) * shape_[1] + b]; }
  double operator()(int a, int b) const { return data_[static_cast<std::size_t>(a) * shape_[1] + b]; }
  double& operator()(int a, int b, int c) {
    return data_[(static_cast<std::size_t>(a) * shape_[1] + b) * shape_[2] + c];
  }
  double operator()(int a, int b, int c) const {
    return data_[(static_cast<std::size_t>(a) * shape_[1] + b) * shape_[2] + c];
  }
  double& operator()(int a, int b, int c, int d) {
    return data_[((static_cast<std::size_t>(a) * shape_[1] + b) * shape_[2] + c) * shape_[3] + d];
  }
  double operator()(int a, int b, int c, int d) const {
    return data_[((static_cast<std::size_t>(a) * shape_[1] + b) * shape_[2] + c) * shape_[3] + d];
  }

  void fill(double v);
  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

}  // namespace orpose
