// include/phonesv/svm/smo.h

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

#ifndef PHONESV_SVM_SMO_H_
#define PHONESV_SVM_SMO_H_

#include <cstddef>
#include <span>
#include <vector>

#include "phonesv/svm/kernel.h"

namespace phonesv {

struct SmoOptions {
  // Stop when the maximal KKT violation m(alpha) - M(alpha) drops below this.
  double tolerance = 1e-3;
  long long max_iterations = 10'000'000;
  // Budget for cached kernel rows.
  std::size_t cache_bytes = std::size_t{256} << 20;
};

// Solution of the soft-margin dual
//   max  sum_i a_i - 1/2 sum_ij a_i a_j y_i y_j K_ij
//   s.t. 0 <= a_i <= C_{y_i},  sum_i a_i y_i = 0
// with decision function f(x) = sum_i a_i y_i K(x_i, x) + bias.
struct DualSolution {
  std::vector<double> alpha;
  double bias = 0.0;
  double objective = 0.0;  // dual objective at alpha (maximization form)
  long long iterations = 0;
};

// Sequential minimal optimization with second-order working-set selection
// and a row cache over `kernel`. Labels must be +1/-1 with both present.
// Throws ProcessingError if max_iterations is reached first.
DualSolution SolveDual(const KernelMatrix &kernel, std::span<const int> labels,
                       double c_positive, double c_negative,
                       const SmoOptions &opts = {});

// Dual objective for an arbitrary alpha (used to compare solvers).
double DualObjective(const KernelMatrix &kernel, std::span<const int> labels,
                     std::span<const double> alpha);

}  // namespace phonesv

#endif  // PHONESV_SVM_SMO_H_
