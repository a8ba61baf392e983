#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cssl/common.hpp"

namespace cssl {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Dense row-major tensor of doubles, rank <= 4. Value semantics throughout;
// all training state is snapshots of these.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<size_t>(count(shape_)), 0.0);
  }

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, double v) {
    Tensor t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), v);
    return t;
  }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  double& at(int a) { return data_[static_cast<size_t>(a)]; }
  double& at(int a, int b) { return data_[static_cast<size_t>(a) * dim(1) + b]; }
  double& at(int a, int b, int c) {
    return data_[(static_cast<size_t>(a) * dim(1) + b) * dim(2) + c];
  }
  double& at(int a, int b, int c, int d) {
    return data_[((static_cast<size_t>(a) * dim(1) + b) * dim(2) + c) * dim(3) + d];
  }
  double at(int a) const { return data_[static_cast<size_t>(a)]; }
  double at(int a, int b) const { return data_[static_cast<size_t>(a) * dim(1) + b]; }
  double at(int a, int b, int c) const {
    return data_[(static_cast<size_t>(a) * dim(1) + b) * dim(2) + c];
  }
  double at(int a, int b, int c, int d) const {
    return data_[((static_cast<size_t>(a) * dim(1) + b) * dim(2) + c) * dim(3) + d];
  }

  // Views the flat buffer as a rows x cols row-major matrix.
  Eigen::Map<RowMat> mat(int64_t rows, int64_t cols) {
    return Eigen::Map<RowMat>(data_.data(), rows, cols);
  }
  Eigen::Map<const RowMat> mat(int64_t rows, int64_t cols) const {
    return Eigen::Map<const RowMat>(data_.data(), rows, cols);
  }
  Eigen::Map<Eigen::VectorXd> vec() {
    return Eigen::Map<Eigen::VectorXd>(data_.data(), static_cast<int64_t>(data_.size()));
  }
  Eigen::Map<const Eigen::VectorXd> vec() const {
    return Eigen::Map<const Eigen::VectorXd>(data_.data(), static_cast<int64_t>(data_.size()));
  }

  Tensor reshaped(std::vector<int> shape) const {
    if (count(shape) != numel()) throw Error::failure("reshape: element count mismatch");
    Tensor t = *this;
    t.shape_ = std::move(shape);
    return t;
  }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  static int64_t count(const std::vector<int>& shape) {
    int64_t n = shape.empty() ? 0 : 1;
    for (int d : shape) n *= d;
    return n;
  }

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

}  // namespace cssl
