// include/phonesv/eval/folds.h

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

#ifndef PHONESV_EVAL_FOLDS_H_
#define PHONESV_EVAL_FOLDS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phonesv/pooling/supervector.h"

namespace phonesv {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct SpeakerLabel {
  std::string speaker_id;
  Label label = Label::kUnknown;
};

struct Fold {
  std::vector<std::string> test_speakers;   // sorted
  std::vector<std::string> train_speakers;  // sorted
};

struct FoldPlan {
  std::vector<Fold> folds;
  std::uint64_t seed = kDefaultSeed;

  // Index of the fold whose test side holds `speaker`.
  std::optional<std::size_t> TestFoldOf(const std::string &speaker) const;
};

// Deals speakers into k folds: speakers are sorted, shuffled within each
// class by a seeded Mersenne twister, then positives followed by negatives
// are assigned round-robin. Fold sizes differ by at most one speaker and
// each class is spread as evenly as its count allows.
//
// `utterances` may repeat speakers. Throws ValidationError if k < 2, k
// exceeds the number of speakers, a speaker carries both labels, or either
// class is missing.
FoldPlan SpeakerDisjointFolds(std::span<const SpeakerLabel> utterances, int k,
                              std::uint64_t seed = kDefaultSeed);

}  // namespace phonesv

#endif  // PHONESV_EVAL_FOLDS_H_
