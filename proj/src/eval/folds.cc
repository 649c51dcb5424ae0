// src/eval/folds.cc

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

#include "phonesv/eval/folds.h"

#include <algorithm>
#include <map>
#include <random>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

// Fisher-Yates on raw mt19937_64 output; std::shuffle is not specified
// bit-for-bit across standard libraries.
void SeededShuffle(std::vector<std::string> &items, std::mt19937_64 &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace

std::optional<std::size_t> FoldPlan::TestFoldOf(
    const std::string &speaker) const {
  for (std::size_t f = 0; f < folds.size(); ++f)
    if (std::binary_search(folds[f].test_speakers.begin(),
                           folds[f].test_speakers.end(), speaker))
      return f;
  return std::nullopt;
}

FoldPlan SpeakerDisjointFolds(std::span<const SpeakerLabel> utterances, int k,
                              std::uint64_t seed) {
  if (k < 2)
    throw ValidationError("fold count must be at least 2, got " +
                          std::to_string(k));
  std::map<std::string, Label> speakers;
  for (const SpeakerLabel &u : utterances) {
    if (u.label != Label::kPositive && u.label != Label::kNegative)
      throw ValidationError("speaker '" + u.speaker_id +
                            "' has no positive/negative label");
    auto [it, inserted] = speakers.emplace(u.speaker_id, u.label);
    if (!inserted && it->second != u.label)
      throw ValidationError("speaker '" + u.speaker_id +
                            "' is labeled with both classes");
  }
  if (static_cast<std::size_t>(k) > speakers.size())
    throw ValidationError("fold count " + std::to_string(k) +
                          " exceeds speaker count " +
                          std::to_string(speakers.size()));

  std::vector<std::string> pos, neg;
  for (const auto &[id, label] : speakers)
    (label == Label::kPositive ? pos : neg).push_back(id);
  if (pos.empty() || neg.empty())
    throw ValidationError("fold construction needs speakers of both classes");

  std::mt19937_64 rng(seed);
  SeededShuffle(pos, rng);
  SeededShuffle(neg, rng);

  FoldPlan plan;
  plan.seed = seed;
  plan.folds.resize(static_cast<std::size_t>(k));
  std::size_t slot = 0;
  for (const auto *group : {&pos, &neg})
    for (const std::string &id : *group)
      plan.folds[slot++ % plan.folds.size()].test_speakers.push_back(id);

  for (Fold &fold : plan.folds) {
    std::sort(fold.test_speakers.begin(), fold.test_speakers.end());
    for (const auto &[id, label] : speakers)
      if (!std::binary_search(fold.test_speakers.begin(),
                              fold.test_speakers.end(), id))
        fold.train_speakers.push_back(id);
  }
  return plan;
}

}  // namespace phonesv
