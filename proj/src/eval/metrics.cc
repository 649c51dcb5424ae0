// src/eval/metrics.cc

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

#include "phonesv/eval/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {

void ConfusionMatrix::Add(int truth, int predicted) {
  if (truth > 0)
    (predicted > 0 ? tp : fn) += 1;
  else
    (predicted > 0 ? fp : tn) += 1;
}

ConfusionMatrix &ConfusionMatrix::operator+=(const ConfusionMatrix &o) {
  tp += o.tp;
  fp += o.fp;
  tn += o.tn;
  fn += o.fn;
  return *this;
}

Interval WilsonInterval(std::size_t correct, std::size_t n, double z) {
  if (n == 0) throw ValidationError("confidence interval needs n > 0");
  if (correct > n)
    throw ValidationError("correct count " + std::to_string(correct) +
                          " exceeds n " + std::to_string(n));
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(correct) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  // Exact at the boundaries.
  if (correct == 0) ci.low = 0.0;
  if (correct == n) ci.high = 1.0;
  return ci;
}

MetricReport ComputeMetrics(const ConfusionMatrix &cm) {
  if (cm.total() == 0)
    throw ValidationError("cannot compute metrics on an empty confusion matrix");
  MetricReport r;
  r.cm = cm;
  r.n = cm.total();
  auto ratio = [](std::size_t num, std::size_t den, bool &undefined) {
    undefined = den == 0;
    return undefined ? 0.0 : static_cast<double>(num) / den;
  };
  r.accuracy = static_cast<double>(cm.correct()) / r.n;
  r.precision = ratio(cm.tp, cm.tp + cm.fp, r.precision_undefined);
  r.recall = ratio(cm.tp, cm.tp + cm.fn, r.recall_undefined);
  r.sensitivity = r.recall;
  r.specificity = ratio(cm.tn, cm.tn + cm.fp, r.specificity_undefined);
  if (r.precision + r.recall > 0.0) {
    r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  } else {
    r.f1 = 0.0;
    r.f1_undefined = true;
  }
  r.ci95 = WilsonInterval(cm.correct(), r.n);
  return r;
}

}  // namespace phonesv
