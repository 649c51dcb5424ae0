// include/phonesv/eval/metrics.h

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

#ifndef PHONESV_EVAL_METRICS_H_
#define PHONESV_EVAL_METRICS_H_

#include <cstddef>
#include <optional>

namespace phonesv {

inline constexpr double kZ95 = 1.959964;

struct ConfusionMatrix {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  std::size_t correct() const { return tp + tn; }
  // truth and predicted are +1 / -1.
  void Add(int truth, int predicted);
  ConfusionMatrix &operator+=(const ConfusionMatrix &o);
  friend bool operator==(const ConfusionMatrix &, const ConfusionMatrix &) =
      default;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

// Wilson score interval for a binomial proportion. Throws ValidationError
// when n == 0 or correct > n.
Interval WilsonInterval(std::size_t correct, std::size_t n, double z = kZ95);

// Ratios that would divide by zero are reported as 0 with the matching
// flag set.
struct MetricReport {
  ConfusionMatrix cm;
  std::size_t n = 0;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
  Interval ci95;
  std::optional<double> auc;

  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;
  bool specificity_undefined = false;

  bool degenerate() const {
    return precision_undefined || recall_undefined || f1_undefined ||
           specificity_undefined;
  }
};

// precision = TP/(TP+FP), recall = sensitivity = TP/(TP+FN),
// F1 = 2PR/(P+R), specificity = TN/(TN+FP), accuracy = (TP+TN)/n and its
// Wilson 95% interval. Throws ValidationError on an empty matrix.
MetricReport ComputeMetrics(const ConfusionMatrix &cm);

}  // namespace phonesv

#endif  // PHONESV_EVAL_METRICS_H_
