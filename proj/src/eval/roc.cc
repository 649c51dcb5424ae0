// src/eval/roc.cc

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

#include "phonesv/eval/roc.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>

#include "phonesv/base/error.h"

namespace phonesv {

RocCurve ComputeRoc(std::span<const double> scores,
                    std::span<const int> labels) {
  if (scores.size() != labels.size())
    throw ValidationError("ROC: score/label count mismatch");
  std::size_t n_pos = 0, n_neg = 0;
  for (int y : labels) (y > 0 ? n_pos : n_neg) += 1;
  for (double s : scores)
    if (!std::isfinite(s)) throw ValidationError("ROC: non-finite score");
  if (n_pos == 0 || n_neg == 0)
    throw ValidationError("ROC needs both positive and negative labels");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  RocCurve roc;
  roc.points.push_back({std::numeric_limits<double>::infinity(), 0.0, 0.0});
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double threshold = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == threshold; ++i)
      (labels[order[i]] > 0 ? tp : fp) += 1;
    RocPoint p{threshold, static_cast<double>(fp) / n_neg,
               static_cast<double>(tp) / n_pos};
    const RocPoint &prev = roc.points.back();
    roc.auc += (p.fpr - prev.fpr) * (p.tpr + prev.tpr) / 2.0;
    roc.points.push_back(p);
  }
  return roc;
}

void WriteRocCsv(const std::filesystem::path &path, const RocCurve &roc) {
  std::ofstream os(path);
  if (!os) throw ProcessingError("cannot write " + path.string());
  os << "threshold,fpr,tpr\n";
  char buf[128];
  for (const RocPoint &p : roc.points) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g\n", p.threshold, p.fpr,
                  p.tpr);
    os << buf;
  }
}

}  // namespace phonesv
