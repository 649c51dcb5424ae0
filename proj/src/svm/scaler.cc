// src/svm/scaler.cc

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

#include "phonesv/svm/scaler.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {

Scaler Scaler::Fit(const std::vector<std::vector<double>> &examples) {
  if (examples.size() < 2)
    throw ValidationError("scaler needs at least 2 examples, got " +
                          std::to_string(examples.size()));
  const std::size_t dim = examples.front().size();
  Scaler s;
  s.mean.assign(dim, 0.0);
  s.stddev.assign(dim, 0.0);
  for (const auto &x : examples) {
    if (x.size() != dim)
      throw ValidationError("scaler input has ragged dimensions");
    for (std::size_t d = 0; d < dim; ++d) {
      if (!std::isfinite(x[d]))
        throw ValidationError("non-finite feature value");
      s.mean[d] += x[d];
    }
  }
  const auto n = static_cast<double>(examples.size());
  for (double &m : s.mean) m /= n;
  for (const auto &x : examples)
    for (std::size_t d = 0; d < dim; ++d) {
      double diff = x[d] - s.mean[d];
      s.stddev[d] += diff * diff;
    }
  for (double &v : s.stddev) v = std::max(std::sqrt(v / n), kStdFloor);
  return s;
}

std::vector<double> Scaler::Transform(std::span<const double> x) const {
  if (x.size() != mean.size())
    throw ValidationError("scaler dimension " + std::to_string(mean.size()) +
                          " does not match input " + std::to_string(x.size()));
  std::vector<double> out(x.size());
  for (std::size_t d = 0; d < x.size(); ++d)
    out[d] = (x[d] - mean[d]) / stddev[d];
  return out;
}

}  // namespace phonesv
