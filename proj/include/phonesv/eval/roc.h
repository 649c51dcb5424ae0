// include/phonesv/eval/roc.h

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

#ifndef PHONESV_EVAL_ROC_H_
#define PHONESV_EVAL_ROC_H_

#include <filesystem>
#include <span>
#include <vector>

namespace phonesv {

struct RocPoint {
  double threshold;  // classify positive when score >= threshold
  double fpr;
  double tpr;
};

struct RocCurve {
  std::vector<RocPoint> points;  // from (0, 0) at +inf down to (1, 1)
  double auc = 0.0;
};

// Sweeps every distinct score as a threshold; equal scores move together,
// so ties contribute a diagonal segment (half credit). AUC by trapezoids.
// Labels are +1 / -1; throws ValidationError unless both occur.
RocCurve ComputeRoc(std::span<const double> scores, std::span<const int> labels);

// CSV with header "threshold,fpr,tpr".
void WriteRocCsv(const std::filesystem::path &path, const RocCurve &roc);

}  // namespace phonesv

#endif  // PHONESV_EVAL_ROC_H_
