// src/cli/commands.cc

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

#include "phonesv/cli/commands.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "phonesv/base/error.h"
#include "phonesv/cli/extraction.h"
#include "phonesv/cli/manifest.h"
#include "phonesv/eval/evaluate.h"
#include "phonesv/eval/folds.h"
#include "phonesv/pooling/supervector_io.h"
#include "phonesv/svm/grid_search.h"

namespace phonesv {
namespace {

template <typename Fn>
int Guarded(std::ostream &err, Fn &&fn) {
  try {
    return fn();
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

std::string Fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string RunName(const RunConfig &cfg) { return cfg.phone_class; }

void EnsureOutDir(const RunConfig &cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec)
    throw ProcessingError("cannot create output directory " +
                          cfg.out_dir.string() + ": " + ec.message());
}

void WriteText(const std::filesystem::path &path, const std::string &text) {
  std::ofstream os(path);
  if (!os) throw ProcessingError("cannot write " + path.string());
  os << text;
}

// Returns false (after printing) when the manifest has problems.
bool CheckManifest(const DatasetManifest &m, std::ostream &err) {
  auto problems = ManifestProblems(m, /*check_files=*/true);
  for (const auto &p : problems)
    err << m.source.string() << ": " << p << '\n';
  return problems.empty();
}

// Returns false (after printing) when any utterance failed.
bool ReportFailures(const ExtractionResult &r, std::ostream &err) {
  for (const auto &f : r.failures)
    err << "extraction failed for '" << f.utterance_id << "': " << f.message
        << '\n';
  return r.failures.empty();
}

int ToSign(Label l) { return l == Label::kPositive ? 1 : -1; }

std::string DescribeMetrics(const MetricReport &m) {
  std::ostringstream ss;
  ss << "n=" << m.n << " acc=" << Fixed(m.accuracy) << " [" << Fixed(m.ci95.low)
     << ", " << Fixed(m.ci95.high) << "]"
     << " P=" << Fixed(m.precision) << " R=" << Fixed(m.recall)
     << " F1=" << Fixed(m.f1) << " sens=" << Fixed(m.sensitivity)
     << " spec=" << Fixed(m.specificity)
     << " auc=" << (m.auc ? Fixed(*m.auc) : std::string("n/a"))
     << " (tp=" << m.cm.tp << " fp=" << m.cm.fp << " tn=" << m.cm.tn
     << " fn=" << m.cm.fn << ")";
  if (m.degenerate()) ss << " [degenerate ratio set to 0]";
  return ss.str();
}

struct CvSetup {
  FoldPlan plan;
  std::vector<CvFoldData> folds;
  // utterance index (into ExtractionResult::utterances) per fold test slot
  std::vector<std::vector<std::size_t>> test_members;
  std::vector<std::size_t> gated_out;
};

CvSetup BuildCvFolds(const DatasetManifest &manifest,
                     const ExtractionResult &ex,
                     const ExtractionContext &ctx) {
  const RunConfig &cfg = ctx.config();
  std::vector<SpeakerLabel> speakers;
  for (const auto &u : ex.utterances) {
    const auto &rec = manifest.records[u.record_index];
    speakers.push_back({rec.speaker_id, rec.label});
  }
  CvSetup s;
  s.plan = SpeakerDisjointFolds(speakers, cfg.folds, cfg.seed);
  const std::size_t k = s.plan.folds.size();
  s.folds.resize(k);
  s.test_members.resize(k);
  s.gated_out.assign(k, 0);
  for (std::size_t i = 0; i < ex.utterances.size(); ++i) {
    const auto &u = ex.utterances[i];
    const auto &rec = manifest.records[u.record_index];
    const std::size_t test_fold = *s.plan.TestFoldOf(rec.speaker_id);
    for (std::size_t f = 0; f < k; ++f) {
      CvFoldData &fold = s.folds[f];
      if (f == test_fold) {
        if (ctx.KeepForTest(u.whole)) {
          fold.test_x.push_back(u.whole.vector.values);
          fold.test_y.push_back(ToSign(rec.label));
          s.test_members[f].push_back(i);
        } else {
          ++s.gated_out[f];
        }
      } else {
        for (const auto &seg : u.segments) {
          if (ctx.KeepForTraining(seg)) {
            fold.train_x.push_back(seg.vector.values);
            fold.train_y.push_back(ToSign(rec.label));
          }
        }
      }
    }
  }
  return s;
}

std::string GridCsv(const GridSearchResult &grid) {
  std::ostringstream ss;
  ss << "c,gamma_spec,gamma,correct,total,accuracy,selected\n";
  for (std::size_t i = 0; i < grid.table.size(); ++i) {
    const GridCell &c = grid.table[i];
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.9g,%s,%.9g,%zu,%zu,%.6f,%d\n", c.c,
                  c.gamma_spec.ToString().c_str(), c.gamma, c.correct, c.total,
                  c.accuracy(), i == grid.best_index ? 1 : 0);
    ss << buf;
  }
  return ss.str();
}

std::string ScoresCsv(const std::vector<std::pair<std::string, FoldOutcome>> &folds) {
  std::ostringstream ss;
  ss << "fold,utterance_id,speaker_id,label,score,predicted\n";
  for (const auto &[name, outcome] : folds)
    for (const auto &u : outcome.scored) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.9g", u.score);
      ss << name << ',' << u.utterance_id << ',' << u.speaker_id << ','
         << u.label << ',' << buf << ',' << u.predicted() << '\n';
    }
  return ss.str();
}

std::size_t CountShort(const ExtractionResult &ex) {
  std::size_t n = 0;
  for (const auto &u : ex.utterances) n += u.short_fallback;
  return n;
}

}  // namespace

RunConfig ResolveConfig(const CommandOptions &opts) {
  RunConfig cfg = opts.config ? RunConfig::FromFile(*opts.config) : RunConfig{};
  for (const auto &[key, value] : opts.overrides) cfg.Set(key, value);
  cfg.Validate();
  return cfg;
}

int CmdValidate(const CommandOptions &opts, std::ostream &out,
                std::ostream &err) {
  return Guarded(err, [&] {
    DatasetManifest m = ReadManifest(opts.manifest);
    ManifestSummary s = Summarize(m);
    out << "manifest: " << opts.manifest.string() << '\n'
        << "utterances: " << s.utterances << '\n'
        << "speakers: " << s.speakers << '\n';
    for (Label l : {Label::kPositive, Label::kNegative})
      out << LabelName(l) << ": "
          << (s.speakers_by_label.count(l) ? s.speakers_by_label.at(l) : 0)
          << " speakers, "
          << (s.utterances_by_label.count(l) ? s.utterances_by_label.at(l) : 0)
          << " utterances\n";
    for (const auto &[spk, n] : s.utterances_by_speaker)
      out << "  speaker " << spk << ": " << n << " utterances\n";
    if (!CheckManifest(m, err)) return int{kExitValidation};
    out << "ok\n";
    return int{kExitOk};
  });
}

int CmdExtract(const CommandOptions &opts, std::ostream &out,
               std::ostream &err) {
  return Guarded(err, [&] {
    RunConfig cfg = ResolveConfig(opts);
    DatasetManifest m = ReadManifest(opts.manifest);
    if (!CheckManifest(m, err)) return int{kExitValidation};
    ExtractionContext ctx(cfg);
    ExtractionResult ex = ExtractManifest(m, ctx);
    bool clean = ReportFailures(ex, err);

    std::vector<SuperVector> whole, segments;
    std::size_t whole_gated = 0, segments_gated = 0;
    for (const auto &u : ex.utterances) {
      if (ctx.KeepForTest(u.whole)) whole.push_back(u.whole.vector);
      else ++whole_gated;
      for (const auto &seg : u.segments) {
        if (ctx.KeepForTraining(seg)) segments.push_back(seg.vector);
        else ++segments_gated;
      }
    }
    EnsureOutDir(cfg);
    WriteSuperVectors(cfg.out_dir / "utterances.svv", ctx.dim(), whole);
    WriteSuperVectors(cfg.out_dir / "segments.svv", ctx.dim(), segments);

    std::ostringstream summary;
    summary << "# resolved config\n" << cfg.ToText()
            << "# extraction\n"
            << "dimension = " << ctx.dim() << '\n'
            << "utterances_extracted = " << ex.utterances.size() << '\n'
            << "utterances_failed = " << ex.failures.size() << '\n'
            << "utterances_written = " << whole.size() << '\n'
            << "utterances_gated_out = " << whole_gated << '\n'
            << "segments_written = " << segments.size() << '\n'
            << "segments_gated_out = " << segments_gated << '\n'
            << "short_utterance_fallbacks = " << CountShort(ex) << '\n';
    WriteText(cfg.out_dir / "extract_summary.txt", summary.str());
    out << summary.str();
    return clean ? int{kExitOk} : int{kExitRuntime};
  });
}

int CmdCv(const CommandOptions &opts, std::ostream &out, std::ostream &err) {
  return Guarded(err, [&] {
    RunConfig cfg = ResolveConfig(opts);
    DatasetManifest m = ReadManifest(opts.manifest);
    if (!CheckManifest(m, err)) return int{kExitValidation};
    ExtractionContext ctx(cfg);
    ExtractionResult ex = ExtractManifest(m, ctx);
    if (!ReportFailures(ex, err)) return int{kExitRuntime};

    CvSetup setup = BuildCvFolds(m, ex, ctx);
    GridSearchResult grid =
        GridSearch(setup.folds, cfg.c_grid, cfg.gamma_grid,
                   cfg.class_weighting, cfg.smo_options(), cfg.workers);
    const GridCell &best = grid.table[grid.best_index];

    std::vector<FoldOutcome> outcomes(setup.folds.size());
    std::vector<std::pair<std::string, FoldOutcome>> named;
    for (std::size_t f = 0; f < setup.folds.size(); ++f) {
      for (std::size_t s = 0; s < setup.test_members[f].size(); ++s) {
        const auto &u = ex.utterances[setup.test_members[f][s]];
        const auto &rec = m.records[u.record_index];
        outcomes[f].scored.push_back({rec.utterance_id, rec.speaker_id,
                                      ToSign(rec.label),
                                      best.fold_scores[f][s]});
      }
      outcomes[f].gated_out = setup.gated_out[f];
      named.emplace_back(std::to_string(f + 1), outcomes[f]);
    }
    RunReport report = EvaluateRun(outcomes);

    EnsureOutDir(cfg);
    std::vector<ReportRow> rows;
    for (std::size_t f = 0; f < report.folds.size(); ++f) {
      std::size_t scored = outcomes[f].scored.size();
      rows.push_back({"cv", std::to_string(f + 1), RunName(cfg),
                      &report.folds[f], scored + outcomes[f].gated_out, scored,
                      best.c, best.gamma, cfg.seed});
    }
    rows.push_back({"cv", "aggregate", RunName(cfg), &report.aggregate,
                    report.candidates, report.retained, best.c, best.gamma,
                    cfg.seed});
    WriteReportCsv(cfg.out_dir / "cv_report.csv", rows);
    WriteText(cfg.out_dir / "cv_grid.csv", GridCsv(grid));
    WriteText(cfg.out_dir / "cv_scores.csv", ScoresCsv(named));
    if (report.roc) WriteRocCsv(cfg.out_dir / "cv_roc.csv", *report.roc);

    std::ostringstream folds_txt;
    for (std::size_t f = 0; f < setup.plan.folds.size(); ++f) {
      folds_txt << "fold " << f + 1 << ":";
      for (const auto &spk : setup.plan.folds[f].test_speakers)
        folds_txt << ' ' << spk;
      folds_txt << '\n';
    }
    WriteText(cfg.out_dir / "folds.txt", folds_txt.str());

    std::ostringstream txt;
    txt << "# resolved config\n" << cfg.ToText() << "# folds (seed "
        << cfg.seed << ")\n" << folds_txt.str()
        << "# selected hyperparameters\n"
        << "c = " << best.c << "\ngamma = " << best.gamma << " ("
        << best.gamma_spec.ToString() << ")\n"
        << "cv_accuracy = " << Fixed(best.accuracy()) << '\n'
        << "# results\n";
    for (std::size_t f = 0; f < report.folds.size(); ++f)
      txt << "fold " << f + 1 << ": " << DescribeMetrics(report.folds[f]) << '\n';
    txt << "weighted aggregate: " << DescribeMetrics(report.aggregate) << '\n';
    if (ctx.gated())
      txt << "retained test utterances: " << report.retained << " / "
          << report.candidates << " (" << Fixed(report.retained_fraction())
          << ")\n";
    txt << "short utterances used whole for training: " << CountShort(ex)
        << '\n';
    WriteText(cfg.out_dir / "cv_report.txt", txt.str());
    out << txt.str();
    return int{kExitOk};
  });
}

int CmdEvaluate(const CommandOptions &opts, std::ostream &out,
                std::ostream &err) {
  return Guarded(err, [&] {
    if (!opts.test_manifest)
      throw ValidationError("evaluate needs --test-manifest");
    RunConfig cfg = ResolveConfig(opts);
    DatasetManifest train_m = ReadManifest(opts.manifest);
    DatasetManifest test_m = ReadManifest(*opts.test_manifest);
    bool ok = CheckManifest(train_m, err);
    ok = CheckManifest(test_m, err) && ok;
    if (!ok) return int{kExitValidation};
    auto shared = SharedSpeakers(train_m, test_m);
    if (!shared.empty()) {
      std::string list;
      for (const auto &s : shared) list += (list.empty() ? "" : ", ") + s;
      throw ValidationError("speakers appear in both train and test manifests: " +
                            list);
    }

    ExtractionContext ctx(cfg);
    ExtractionResult train_ex = ExtractManifest(train_m, ctx);
    ExtractionResult test_ex = ExtractManifest(test_m, ctx);
    ok = ReportFailures(train_ex, err);
    ok = ReportFailures(test_ex, err) && ok;
    if (!ok) return int{kExitRuntime};
    EnsureOutDir(cfg);

    Hyperparams hp;
    hp.class_weighting = cfg.class_weighting;
    std::string provenance;
    if (cfg.c) {
      hp.c = *cfg.c;
      hp.gamma = cfg.gamma->Resolve(ctx.dim());
      provenance = "fixed by config";
    } else {
      CvSetup setup = BuildCvFolds(train_m, train_ex, ctx);
      GridSearchResult grid =
          GridSearch(setup.folds, cfg.c_grid, cfg.gamma_grid,
                     cfg.class_weighting, cfg.smo_options(), cfg.workers);
      hp = grid.best;
      WriteText(cfg.out_dir / "eval_grid.csv", GridCsv(grid));
      provenance = "grid search, " + std::to_string(cfg.folds) +
                   "-fold CV accuracy " +
                   Fixed(grid.table[grid.best_index].accuracy());
    }

    std::vector<std::vector<double>> train_x;
    std::vector<int> train_y;
    for (const auto &u : train_ex.utterances)
      for (const auto &seg : u.segments)
        if (ctx.KeepForTraining(seg)) {
          train_x.push_back(seg.vector.values);
          train_y.push_back(ToSign(seg.vector.label));
        }
    SvmModel model = TrainSvm(train_x, train_y, hp, cfg.smo_options());
    WriteSvmModel(cfg.out_dir / "model.svm", model);

    FoldOutcome outcome;
    for (const auto &u : test_ex.utterances) {
      if (!ctx.KeepForTest(u.whole)) {
        ++outcome.gated_out;
        continue;
      }
      const auto &rec = test_m.records[u.record_index];
      outcome.scored.push_back({rec.utterance_id, rec.speaker_id,
                                ToSign(rec.label),
                                model.DecisionValue(u.whole.vector.values)});
    }
    RunReport report = EvaluateRun({outcome});

    std::vector<ReportRow> rows = {{"evaluate", "test", RunName(cfg),
                                    &report.aggregate, report.candidates,
                                    report.retained, hp.c, hp.gamma, cfg.seed}};
    WriteReportCsv(cfg.out_dir / "eval_report.csv", rows);
    WriteText(cfg.out_dir / "eval_scores.csv", ScoresCsv({{"test", outcome}}));
    if (report.roc) WriteRocCsv(cfg.out_dir / "eval_roc.csv", *report.roc);

    std::ostringstream txt;
    txt << "# resolved config\n" << cfg.ToText()
        << "# hyperparameters (" << provenance << ")\n"
        << "c = " << hp.c << "\ngamma = " << hp.gamma << '\n'
        << "support_vectors = " << model.num_support_vectors() << '\n'
        << "training_examples = " << train_x.size() << '\n'
        << "# results\n"
        << "test: " << DescribeMetrics(report.aggregate) << '\n';
    if (ctx.gated())
      txt << "retained test utterances: " << report.retained << " / "
          << report.candidates << " (" << Fixed(report.retained_fraction())
          << ")\n";
    WriteText(cfg.out_dir / "eval_report.txt", txt.str());
    out << txt.str();
    return int{kExitOk};
  });
}

}  // namespace phonesv
