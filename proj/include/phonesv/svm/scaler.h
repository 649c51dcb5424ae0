// include/phonesv/svm/scaler.h

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

#ifndef PHONESV_SVM_SCALER_H_
#define PHONESV_SVM_SCALER_H_

#include <cstddef>
#include <span>
#include <vector>

namespace phonesv {

inline constexpr double kStdFloor = 1e-8;

// Per-dimension z-score transform fitted on training data.
struct Scaler {
  std::vector<double> mean;
  std::vector<double> stddev;  // population std, floored at kStdFloor

  // Throws ValidationError with fewer than two examples, ragged input, or
  // non-finite values.
  static Scaler Fit(const std::vector<std::vector<double>> &examples);

  std::size_t dim() const { return mean.size(); }
  std::vector<double> Transform(std::span<const double> x) const;
};

}  // namespace phonesv

#endif  // PHONESV_SVM_SCALER_H_
