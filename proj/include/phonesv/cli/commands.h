// include/phonesv/cli/commands.h

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

#ifndef PHONESV_CLI_COMMANDS_H_
#define PHONESV_CLI_COMMANDS_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "phonesv/cli/run_config.h"

namespace phonesv {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitRuntime = 2,
};

struct CommandOptions {
  std::filesystem::path manifest;
  std::optional<std::filesystem::path> test_manifest;
  std::optional<std::filesystem::path> config;
  // Applied after the config file, in order (e.g. {"seed", "7"}).
  std::vector<std::pair<std::string, std::string>> overrides;
};

RunConfig ResolveConfig(const CommandOptions &opts);

// Each command prints a human-readable summary to `out`, diagnostics to
// `err`, writes its files under config.out_dir and returns an ExitCode.
// ValidationError maps to 1, anything else to 2.

// Per-class and per-speaker counts; fails on manifest problems.
int CmdValidate(const CommandOptions &opts, std::ostream &out,
                std::ostream &err);

// Writes utterances.svv (whole utterances passing the test-time gate),
// segments.svv (training examples passing the training gate) and
// extract_summary.txt. Failed utterances are skipped and reported, and the
// exit code is then 2.
int CmdExtract(const CommandOptions &opts, std::ostream &out,
               std::ostream &err);

// Speaker-disjoint cross-validation with grid search. Writes cv_grid.csv,
// cv_report.csv, cv_scores.csv, cv_roc.csv, folds.txt and cv_report.txt.
int CmdCv(const CommandOptions &opts, std::ostream &out, std::ostream &err);

// Trains on --manifest and scores --test-manifest. Hyperparameters come
// from config keys c/gamma or, when absent, from a grid search over
// speaker-disjoint folds of the training manifest. Writes model.svm,
// eval_report.csv, eval_scores.csv, eval_roc.csv, eval_report.txt (and
// eval_grid.csv when searching).
int CmdEvaluate(const CommandOptions &opts, std::ostream &out,
                std::ostream &err);

}  // namespace phonesv

#endif  // PHONESV_CLI_COMMANDS_H_
