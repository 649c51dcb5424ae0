// include/phonesv/cli/run_config.h

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

#ifndef PHONESV_CLI_RUN_CONFIG_H_
#define PHONESV_CLI_RUN_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonesv/eval/folds.h"
#include "phonesv/pooling/segment.h"
#include "phonesv/pooling/supervector.h"
#include "phonesv/posterior/phone_inventory.h"
#include "phonesv/svm/grid_search.h"

namespace phonesv {

enum class GateMode { kBoth, kTestOnly };

// Everything that determines a run. Loaded from a `key = value` file
// ('#' comments), then overridden from the command line. Keys:
//
//   phone_class        full | nasals | back-vowels | ... (default full)
//   threshold          posterior-mass gate for phone-class runs (30)
//   gate_mode          both | test (both)
//   window_seconds     training segment length (3.0)
//   shift_seconds      training segment shift (0.1)
//   c_grid             comma list (0.1,1,10,100)
//   gamma_grid         comma list, "scale" = 1/D (scale,1e-4,1e-3,1e-2,1e-1)
//   c, gamma           fixed hyperparameters for `evaluate` (skip search)
//   class_weighting    true | false (true)
//   folds              cross-validation folds (6)
//   seed               fold assignment seed (42)
//   out                output directory (out)
//   workers            worker threads (1)
//   inventory          phone/class file (built-in default)
//   cd_map             CD->CI map for context-dependent posteriorgrams
//   silence_label      (sil)
//   svm_tolerance      SMO stopping tolerance (1e-3)
//   svm_max_iterations (10000000)
//   svm_cache_mb       kernel row cache (256)
struct RunConfig {
  std::string phone_class = "full";
  double threshold = kDefaultGateThreshold;
  GateMode gate_mode = GateMode::kBoth;
  double window_seconds = 3.0;
  double shift_seconds = 0.1;
  std::vector<double> c_grid = DefaultCGrid();
  std::vector<GammaSpec> gamma_grid = DefaultGammaGrid();
  std::optional<double> c;
  std::optional<GammaSpec> gamma;
  bool class_weighting = true;
  int folds = 6;
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path out_dir = "out";
  int workers = 1;
  std::optional<std::filesystem::path> inventory_path;
  std::optional<std::filesystem::path> cd_map_path;
  std::string silence_label = "sil";
  double svm_tolerance = 1e-3;
  long long svm_max_iterations = 10'000'000;
  std::size_t svm_cache_mb = 256;

  // Relative paths in the file resolve against its directory.
  static RunConfig FromFile(const std::filesystem::path &path);

  // Throws ValidationError on an unknown key or a malformed value.
  void Set(std::string_view key, std::string_view value,
           const std::filesystem::path &base_dir = {});

  // Throws ValidationError on an invalid combination.
  void Validate() const;

  bool is_full() const { return phone_class == "full"; }
  SegmentSpec segment_spec() const;
  SmoOptions smo_options() const;

  // Fully resolved `key = value` text, one per line, in a fixed order.
  std::string ToText() const;
};

}  // namespace phonesv

#endif  // PHONESV_CLI_RUN_CONFIG_H_
