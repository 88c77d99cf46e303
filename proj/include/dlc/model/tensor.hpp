// Copyright 2026 The dlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "dlc/error.hpp"

namespace dlc {

/**
 * Dense tensor with row-major entries (the last axis varies fastest).  A
 * rank-0 tensor holds one entry.
 **/
template <typename Scalar>
class Tensor {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Tensor() : data_(Vector::Ones(1)) {}
  explicit Tensor(std::vector<int> shape)
      : shape_(std::move(shape)), data_(Vector::Zero(count(shape_))) {}
  Tensor(std::vector<int> shape, Vector data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != count(shape_))
      throw ModelError("tensor data has " + std::to_string(data_.size()) +
                       " entries, shape needs " + std::to_string(count(shape_)));
  }

  static Tensor scalar(Scalar v) {
    Tensor t;
    t.data_(0) = v;
    return t;
  }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  Eigen::Index size() const { return data_.size(); }
  const Vector& data() const { return data_; }
  Vector& data() { return data_; }

  Scalar& operator[](Eigen::Index i) { return data_(i); }
  const Scalar& operator[](Eigen::Index i) const { return data_(i); }

  /// Flat index of a multi-index.
  Eigen::Index offset(const std::vector<int>& index) const {
    Eigen::Index k = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) k = k * shape_[a] + index[a];
    return k;
  }

  static Eigen::Index count(const std::vector<int>& shape) {
    return std::accumulate(shape.begin(), shape.end(), Eigen::Index{1},
                           [](Eigen::Index a, int b) { return a * b; });
  }

 private:
  std::vector<int> shape_;
  Vector data_;
};

/// Advances a row-major multi-index; false after the last one.
inline bool next_index(std::vector<int>& index, const std::vector<int>& shape) {
  for (std::size_t a = shape.size(); a-- > 0;) {
    if (++index[a] < shape[a]) return true;
    index[a] = 0;
  }
  return false;
}

/// out[i_perm[0], ..., i_perm[n-1]] = t[i_0, ..., i_{n-1}].
template <typename Scalar>
Tensor<Scalar> permute(const Tensor<Scalar>& t, const std::vector<int>& perm) {
  std::vector<int> shape(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) shape[a] = t.shape()[perm[a]];
  Tensor<Scalar> out(shape);
  if (t.size() == 0) return out;
  std::vector<Eigen::Index> stride(t.rank(), 1);
  for (int a = t.rank() - 1; a > 0; --a) stride[a - 1] = stride[a] * t.shape()[a];
  std::vector<int> idx(shape.size(), 0);
  Eigen::Index k = 0;
  do {
    Eigen::Index src = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) src += idx[a] * stride[perm[a]];
    out[k++] = t[src];
  } while (next_index(idx, shape));
  return out;
}

/// Views a tensor as a matrix whose rows range over the first `row_axes` axes.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> as_matrix(
    const Tensor<Scalar>& t, int row_axes) {
  Eigen::Index rows = 1;
  for (int a = 0; a < row_axes; ++a) rows *= t.shape()[a];
  Eigen::Index cols = t.size() / std::max<Eigen::Index>(rows, 1);
  using RowMajor =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  return Eigen::Map<const RowMajor>(t.data().data(), rows, cols);
}

template <typename Scalar>
double max_abs(const Tensor<Scalar>& t) {
  return t.size() ? static_cast<double>(t.data().cwiseAbs().maxCoeff()) : 0.0;
}

/// Largest entrywise difference; shapes must agree.
template <typename Scalar>
double max_abs_diff(const Tensor<Scalar>& a, const Tensor<Scalar>& b) {
  if (a.shape() != b.shape()) throw ModelError("tensor shapes differ");
  return a.size() ? static_cast<double>((a.data() - b.data()).cwiseAbs().maxCoeff())
                  : 0.0;
}

}  // namespace dlc
