// src/svm/kernel.cc

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

#include "phonesv/svm/kernel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

double RbfKernel(std::span<const double> a, std::span<const double> b,
                 double gamma) {
  if (a.size() != b.size())
    throw ValidationError("kernel dimension mismatch: " +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  if (!(gamma > 0.0))
    throw ValidationError("RBF gamma must be positive");
  return std::exp(-gamma * SquaredDistance(a, b));
}

void DenseKernelMatrix::Row(std::size_t i, std::span<double> out) const {
  auto row = k_.Row(i);
  std::copy(row.begin(), row.end(), out.begin());
}

void RbfKernelMatrix::Row(std::size_t i, std::span<double> out) const {
  for (std::size_t j = 0; j < examples_.size(); ++j)
    out[j] = std::exp(-gamma_ * SquaredDistance(examples_[i], examples_[j]));
}

void RbfFromDistances::Row(std::size_t i, std::span<double> out) const {
  auto row = d2_.Row(i);
  for (std::size_t j = 0; j < row.size(); ++j)
    out[j] = std::exp(-gamma_ * row[j]);
}

Matrix PairwiseSquaredDistances(const std::vector<std::vector<double>> &x) {
  const std::size_t n = x.size();
  Matrix d2(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = SquaredDistance(x[i], x[j]);
      d2(i, j) = v;
      d2(j, i) = v;
    }
  return d2;
}

}  // namespace phonesv
