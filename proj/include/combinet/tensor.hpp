#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace combinet {

using real = double;

// Dense n-dimensional array with shared storage. Activations use NCHW layout,
// convolution kernels Cout x Cin/groups x Kh x Kw. Values are immutable once
// an op has consumed the tensor; gradient storage is attached lazily.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape, real fill = 0.0);
  static Tensor from(std::vector<int> shape, std::vector<real> values);
  static Tensor scalar(real v);

  const std::vector<int>& shape() const { return shape_; }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int64_t numel() const { return numel_; }
  bool defined() const { return data_ != nullptr; }

  real* data() { return data_->data(); }
  const real* data() const { return data_->data(); }

  real at(std::initializer_list<int> idx) const;
  real& at(std::initializer_list<int> idx);

  uint64_t id() const { return id_; }
  bool requires_grad() const { return requires_grad_; }
  Tensor& set_requires_grad(bool b = true);

  // Gradient buffer, same length as data. Allocated zero-filled on demand.
  real* grad();
  const real* grad_data() const;
  bool has_grad() const { return grad_ != nullptr; }
  void zero_grad();

  bool all_finite() const;
  std::string shape_str() const;

  // NCHW accessors for 4-d tensors.
  int n() const { return shape_[0]; }
  int c() const { return shape_[1]; }
  int h() const { return shape_[2]; }
  int w() const { return shape_[3]; }

 private:
  std::vector<int> shape_;
  int64_t numel_ = 0;
  std::shared_ptr<std::vector<real>> data_;
  std::shared_ptr<std::vector<real>> grad_;
  bool requires_grad_ = false;
  uint64_t id_ = 0;

  int64_t flat_index(std::initializer_list<int> idx) const;
};

int64_t shape_numel(const std::vector<int>& shape);
std::string shape_to_string(const std::vector<int>& shape);

}  // namespace combinet
