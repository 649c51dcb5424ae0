// include/phonesv/cli/extraction.h

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

#ifndef PHONESV_CLI_EXTRACTION_H_
#define PHONESV_CLI_EXTRACTION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phonesv/cli/manifest.h"
#include "phonesv/cli/run_config.h"
#include "phonesv/posterior/cd_to_ci.h"
#include "phonesv/posterior/phone_inventory.h"

namespace phonesv {

// One pooled example with the posterior mass behind it.
struct PooledExample {
  SuperVector vector;
  double mass = 0.0;
};

struct UtteranceFeatures {
  std::size_t record_index = 0;
  std::size_t frames = 0;
  PooledExample whole;                 // test-time representation
  std::vector<PooledExample> segments; // training examples
  bool short_fallback = false;         // fewer frames than one window
};

// Resolved phone subset plus everything needed to go from manifest
// records to super vectors.
class ExtractionContext {
 public:
  explicit ExtractionContext(const RunConfig &config);

  const RunConfig &config() const { return config_; }
  const PhonemeInventory &inventory() const { return inventory_; }
  const std::vector<std::size_t> &subset() const { return subset_; }
  std::size_t dim() const { return subset_.size() * kNumMelBins; }
  bool gated() const { return !config_.is_full(); }

  // Loads audio and posteriors, aligns frames and pools. Throws on failure.
  UtteranceFeatures Extract(const ManifestRecord &record,
                            std::size_t record_index) const;

  // Gate decisions. Full-inventory runs are never gated.
  bool KeepForTest(const PooledExample &e) const;
  bool KeepForTraining(const PooledExample &e) const;

 private:
  RunConfig config_;
  PhonemeInventory inventory_;
  std::optional<CdToCiMap> cd_map_;
  std::vector<std::size_t> subset_;
  SegmentSpec segments_;
};

struct ExtractionFailure {
  std::string utterance_id;
  std::string message;
};

struct ExtractionResult {
  std::vector<UtteranceFeatures> utterances;  // manifest order, successes only
  std::vector<ExtractionFailure> failures;
};

// Extracts every record on config.workers threads; order and content do
// not depend on the worker count.
ExtractionResult ExtractManifest(const DatasetManifest &manifest,
                                 const ExtractionContext &ctx);

}  // namespace phonesv

#endif  // PHONESV_CLI_EXTRACTION_H_
