// tools/phonesv.cc

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

// Command-line driver: validate | extract | cv | evaluate.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "phonesv/cli/commands.h"

namespace {

struct Flags {
  std::string manifest;
  std::string test_manifest;
  std::string config;
  std::string phone_class;
  std::string threshold;
  std::string seed;
  std::string out;
  std::string workers;
  std::string folds;
};

void AddCommon(CLI::App *cmd, Flags *f, bool needs_test) {
  cmd->add_option("--manifest", f->manifest, "Dataset manifest CSV")->required();
  if (needs_test)
    cmd->add_option("--test-manifest", f->test_manifest, "Test manifest CSV")
        ->required();
  cmd->add_option("--config", f->config, "key = value run configuration");
  cmd->add_option("--phone-class", f->phone_class,
                  "full or one of the eight phone classes");
  cmd->add_option("--threshold", f->threshold, "Posterior-mass gate");
  cmd->add_option("--seed", f->seed, "Fold assignment seed");
  cmd->add_option("--out", f->out, "Output directory");
  cmd->add_option("--workers", f->workers, "Extraction/training workers");
  cmd->add_option("--folds", f->folds, "Number of CV folds");
}

phonesv::CommandOptions ToOptions(const Flags &f) {
  phonesv::CommandOptions o;
  o.manifest = f.manifest;
  if (!f.test_manifest.empty()) o.test_manifest = f.test_manifest;
  if (!f.config.empty()) o.config = f.config;
  auto add = [&](const char *key, const std::string &v) {
    if (!v.empty()) o.overrides.emplace_back(key, v);
  };
  add("phone_class", f.phone_class);
  add("threshold", f.threshold);
  add("seed", f.seed);
  add("out", f.out);
  add("workers", f.workers);
  add("folds", f.folds);
  return o;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"phonesv: phonetic super-vector speech classification"};
  app.require_subcommand(1);
  Flags flags;
  auto *validate = app.add_subcommand("validate", "Check a manifest");
  validate->add_option("--manifest", flags.manifest, "Dataset manifest CSV")
      ->required();
  auto *extract = app.add_subcommand("extract", "Write super-vector files");
  AddCommon(extract, &flags, false);
  auto *cv = app.add_subcommand("cv", "Speaker-disjoint cross-validation");
  AddCommon(cv, &flags, false);
  auto *evaluate =
      app.add_subcommand("evaluate", "Train on one manifest, test on another");
  AddCommon(evaluate, &flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : phonesv::kExitValidation;
  }

  phonesv::CommandOptions opts = ToOptions(flags);
  if (validate->parsed())
    return phonesv::CmdValidate(opts, std::cout, std::cerr);
  if (extract->parsed()) return phonesv::CmdExtract(opts, std::cout, std::cerr);
  if (cv->parsed()) return phonesv::CmdCv(opts, std::cout, std::cerr);
  return phonesv::CmdEvaluate(opts, std::cout, std::cerr);
}
