// include/phonesv/svm/kernel.h

// Copyright 2026  The phonesv Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PHONESV_SVM_KERNEL_H_
#define PHONESV_SVM_KERNEL_H_

#include <cstddef>
#include <span>
#include <vector>

#include "phonesv/base/matrix.h"

namespace phonesv {

double SquaredDistance(std::span<const double> a, std::span<const double> b);

// exp(-gamma * ||a - b||^2). Throws ValidationError on dimension mismatch
// or gamma <= 0.
double RbfKernel(std::span<const double> a, std::span<const double> b,
                 double gamma);

// Read-only n x n kernel matrix accessed by rows.
class KernelMatrix {
 public:
  virtual ~KernelMatrix() = default;
  virtual std::size_t size() const = 0;
  // out[j] = K(i, j) for all j.
  virtual void Row(std::size_t i, std::span<double> out) const = 0;
  virtual double Diagonal(std::size_t i) const = 0;
};

// Wraps an explicit matrix.
class DenseKernelMatrix : public KernelMatrix {
 public:
  explicit DenseKernelMatrix(Matrix k) : k_(std::move(k)) {}
  std::size_t size() const override { return k_.rows(); }
  void Row(std::size_t i, std::span<double> out) const override;
  double Diagonal(std::size_t i) const override { return k_(i, i); }

 private:
  Matrix k_;
};

// RBF kernel evaluated on demand from the examples.
class RbfKernelMatrix : public KernelMatrix {
 public:
  RbfKernelMatrix(const std::vector<std::vector<double>> &examples,
                  double gamma)
      : examples_(examples), gamma_(gamma) {}
  std::size_t size() const override { return examples_.size(); }
  void Row(std::size_t i, std::span<double> out) const override;
  double Diagonal(std::size_t) const override { return 1.0; }

 private:
  const std::vector<std::vector<double>> &examples_;
  double gamma_;
};

// RBF kernel from a precomputed squared-distance matrix; lets a grid over
// gamma share one O(n^2 D) pass.
class RbfFromDistances : public KernelMatrix {
 public:
  RbfFromDistances(const Matrix &squared_distances, double gamma)
      : d2_(squared_distances), gamma_(gamma) {}
  std::size_t size() const override { return d2_.rows(); }
  void Row(std::size_t i, std::span<double> out) const override;
  double Diagonal(std::size_t) const override { return 1.0; }

 private:
  const Matrix &d2_;
  double gamma_;
};

Matrix PairwiseSquaredDistances(const std::vector<std::vector<double>> &x);

}  // namespace phonesv

#endif  // PHONESV_SVM_KERNEL_H_
