// src/cli/extraction.cc

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

#include "phonesv/cli/extraction.h"

#include <numeric>

#include "phonesv/base/error.h"
#include "phonesv/base/parallel.h"
#include "phonesv/dsp/frontend.h"
#include "phonesv/pooling/segment.h"

namespace phonesv {

ExtractionContext::ExtractionContext(const RunConfig &config)
    : config_(config),
      inventory_(config.inventory_path
                     ? PhonemeInventory::FromFile(*config.inventory_path)
                     : PhonemeInventory::Default()),
      segments_(config.segment_spec()) {
  config_.Validate();
  if (config.cd_map_path)
    cd_map_ = ReadCdToCiMap(*config.cd_map_path, inventory_,
                            config.silence_label);
  if (config.is_full()) {
    subset_.resize(inventory_.size());
    std::iota(subset_.begin(), subset_.end(), std::size_t{0});
  } else {
    subset_ = ClassIndices(inventory_, config.phone_class);
    if (subset_.empty())
      throw ValidationError("phone class '" + config.phone_class +
                            "' has no phones in the inventory");
  }
}

UtteranceFeatures ExtractionContext::Extract(const ManifestRecord &record,
                                             std::size_t record_index) const {
  FeatureMatrix feats = TelephoneFeaturesFromFile(record.audio_path);
  Posteriorgram raw = LoadPosteriorgram(record.posteriorgram_path, feats.rows());
  Posteriorgram pg =
      ToInventoryPosteriors(raw, inventory_, cd_map_, config_.silence_label);
  AlignFrames(feats, pg);

  auto pooled = [&](const FeatureMatrix &x, const Posteriorgram &p,
                    std::string id) {
    PooledExample e;
    e.vector.utterance_id = std::move(id);
    e.vector.speaker_id = record.speaker_id;
    e.vector.label = record.label;
    e.vector.values = BuildSupervector(x, p, subset_);
    e.mass = PosteriorMass(p, subset_);
    return e;
  };

  UtteranceFeatures out;
  out.record_index = record_index;
  out.frames = feats.rows();
  out.whole = pooled(feats, pg, record.utterance_id);
  out.short_fallback = feats.rows() < segments_.window_frames;
  std::size_t k = 0;
  for (const Segment &seg : SegmentUtterance(feats, pg, segments_))
    out.segments.push_back(pooled(seg.feats, seg.posteriors,
                                  record.utterance_id + "#" +
                                      std::to_string(k++)));
  return out;
}

bool ExtractionContext::KeepForTest(const PooledExample &e) const {
  return !gated() || PassesGate(e.mass, config_.threshold);
}

bool ExtractionContext::KeepForTraining(const PooledExample &e) const {
  if (!gated() || config_.gate_mode == GateMode::kTestOnly) return true;
  return PassesGate(e.mass, config_.threshold);
}

ExtractionResult ExtractManifest(const DatasetManifest &manifest,
                                 const ExtractionContext &ctx) {
  const std::size_t n = manifest.records.size();
  std::vector<std::optional<UtteranceFeatures>> slots(n);
  std::vector<std::string> errors(n);
  ParallelFor(n, ctx.config().workers, [&](std::size_t i) {
    try {
      slots[i] = ctx.Extract(manifest.records[i], i);
    } catch (const std::exception &e) {
      errors[i] = e.what();
    }
  });
  ExtractionResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (slots[i])
      result.utterances.push_back(std::move(*slots[i]));
    else
      result.failures.push_back({manifest.records[i].utterance_id, errors[i]});
  }
  return result;
}

}  // namespace phonesv
