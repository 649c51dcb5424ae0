// src/eval/evaluate.cc

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

#include "phonesv/eval/evaluate.h"

#include <cstdio>
#include <fstream>

#include "phonesv/base/error.h"

namespace phonesv {

RunReport EvaluateRun(const std::vector<FoldOutcome> &folds) {
  RunReport report;
  ConfusionMatrix pooled;
  std::vector<double> scores;
  std::vector<int> labels;
  for (const FoldOutcome &fold : folds) {
    ConfusionMatrix cm;
    for (const ScoredUtterance &u : fold.scored) {
      cm.Add(u.label, u.predicted());
      scores.push_back(u.score);
      labels.push_back(u.label);
    }
    report.folds.push_back(cm.total() > 0 ? ComputeMetrics(cm)
                                          : MetricReport{});
    if (cm.total() > 0) {
      bool pos = cm.tp + cm.fn > 0, neg = cm.tn + cm.fp > 0;
      if (pos && neg) {
        std::vector<double> s;
        std::vector<int> l;
        for (const ScoredUtterance &u : fold.scored) {
          s.push_back(u.score);
          l.push_back(u.label);
        }
        report.folds.back().auc = ComputeRoc(s, l).auc;
      }
    }
    pooled += cm;
    report.retained += fold.scored.size();
    report.candidates += fold.scored.size() + fold.gated_out;
  }
  if (pooled.total() == 0)
    throw ValidationError("no test utterances were scored (all gated out?)");
  report.aggregate = ComputeMetrics(pooled);
  if (pooled.tp + pooled.fn > 0 && pooled.tn + pooled.fp > 0) {
    report.roc = ComputeRoc(scores, labels);
    report.aggregate.auc = report.roc->auc;
  }
  return report;
}

double WeightedAverageAccuracy(const std::vector<MetricReport> &folds) {
  double num = 0.0, den = 0.0;
  for (const MetricReport &m : folds) {
    num += m.accuracy * static_cast<double>(m.n);
    den += static_cast<double>(m.n);
  }
  if (den == 0.0) throw ValidationError("no scored folds to average");
  return num / den;
}

std::string ReportCsvHeader() {
  return "run,fold,phone_class,n,candidates,retained_fraction,tp,fp,tn,fn,"
         "accuracy,precision,recall,f1,sensitivity,specificity,auc,"
         "ci95_low,ci95_high,degenerate,c,gamma,seed";
}

std::string ReportCsvLine(const ReportRow &row) {
  const MetricReport &m = *row.metrics;
  char buf[512];
  char auc[32] = "";
  if (m.auc) std::snprintf(auc, sizeof auc, "%.6f", *m.auc);
  double fraction = row.candidates
                        ? static_cast<double>(row.retained) / row.candidates
                        : 0.0;
  std::snprintf(buf, sizeof buf,
                "%zu,%zu,%.6f,%zu,%zu,%zu,%zu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%s,"
                "%.6f,%.6f,%d,%.9g,%.9g,%llu",
                m.n, row.candidates, fraction, m.cm.tp, m.cm.fp, m.cm.tn,
                m.cm.fn, m.accuracy, m.precision, m.recall, m.f1,
                m.sensitivity, m.specificity, auc, m.ci95.low, m.ci95.high,
                m.degenerate() ? 1 : 0, row.c, row.gamma, row.seed);
  return row.run + "," + row.fold + "," + row.phone_class + "," + buf;
}

void WriteReportCsv(const std::filesystem::path &path,
                    const std::vector<ReportRow> &rows) {
  std::ofstream os(path);
  if (!os) throw ProcessingError("cannot write " + path.string());
  os << ReportCsvHeader() << '\n';
  for (const ReportRow &row : rows) os << ReportCsvLine(row) << '\n';
}

}  // namespace phonesv
