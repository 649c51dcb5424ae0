// include/phonesv/eval/evaluate.h

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

#ifndef PHONESV_EVAL_EVALUATE_H_
#define PHONESV_EVAL_EVALUATE_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "phonesv/eval/metrics.h"
#include "phonesv/eval/roc.h"

namespace phonesv {

struct ScoredUtterance {
  std::string utterance_id;
  std::string speaker_id;
  int label = 0;  // +1 / -1
  double score = 0.0;
  int predicted() const { return score >= 0.0 ? 1 : -1; }
};

// Test-side output of one fold (or of a single train/test split).
struct FoldOutcome {
  std::vector<ScoredUtterance> scored;
  // Test utterances excluded by the posterior-mass gate.
  std::size_t gated_out = 0;
};

struct RunReport {
  std::vector<MetricReport> folds;  // n == 0 for a fold with nothing scored
  MetricReport aggregate;           // pooled over folds
  std::optional<RocCurve> roc;      // pooled scores, if both classes present
  std::size_t candidates = 0;       // scored + gated out
  std::size_t retained = 0;
  double retained_fraction() const {
    return candidates ? static_cast<double>(retained) / candidates : 0.0;
  }
};

// Per-fold metrics plus the utterance-weighted aggregate (confusion counts
// summed over folds). Throws ValidationError if nothing was scored at all.
RunReport EvaluateRun(const std::vector<FoldOutcome> &folds);

// sum_f accuracy_f * n_f / sum_f n_f over folds with n_f > 0.
double WeightedAverageAccuracy(const std::vector<MetricReport> &folds);

// One machine-readable report row.
struct ReportRow {
  std::string run;
  std::string fold;  // "1".."k", "aggregate" or "test"
  std::string phone_class;
  const MetricReport *metrics = nullptr;
  std::size_t candidates = 0;
  std::size_t retained = 0;
  double c = 0.0;
  double gamma = 0.0;
  unsigned long long seed = 0;
};

std::string ReportCsvHeader();
std::string ReportCsvLine(const ReportRow &row);
void WriteReportCsv(const std::filesystem::path &path,
                    const std::vector<ReportRow> &rows);

}  // namespace phonesv

#endif  // PHONESV_EVAL_EVALUATE_H_
