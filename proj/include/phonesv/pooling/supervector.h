// include/phonesv/pooling/supervector.h

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

#ifndef PHONESV_POOLING_SUPERVECTOR_H_
#define PHONESV_POOLING_SUPERVECTOR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "phonesv/dsp/mel_fbank.h"
#include "phonesv/posterior/posteriorgram.h"

namespace phonesv {

enum class Label : std::int8_t { kNegative = -1, kUnknown = 0, kPositive = 1 };

inline constexpr double kDefaultGateThreshold = 30.0;

// Utterance (or segment) representation: per-phone posterior-weighted
// feature means concatenated in subset order.
struct SuperVector {
  std::string utterance_id;
  std::string speaker_id;
  Label label = Label::kUnknown;
  std::vector<double> values;
};

// f = sum_j p(j, phone) x_j / sum_j p(j, phone), accumulated in double in
// frame order. A phone with zero total posterior yields the zero vector.
// Throws ValidationError on frame-count mismatch, T == 0, or non-finite
// input.
std::vector<double> FirstOrderStats(const FeatureMatrix &feats,
                                    const Posteriorgram &pg, std::size_t phone);

// Concatenation of FirstOrderStats over `subset`; size D * |subset|.
std::vector<double> BuildSupervector(const FeatureMatrix &feats,
                                     const Posteriorgram &pg,
                                     std::span<const std::size_t> subset);

// Total posterior over all frames and the phones in `subset`.
double PosteriorMass(const Posteriorgram &pg,
                     std::span<const std::size_t> subset);

// Inclusive: an example with mass exactly at the threshold is kept.
inline bool PassesGate(double mass, double threshold) {
  return mass >= threshold;
}

}  // namespace phonesv

#endif  // PHONESV_POOLING_SUPERVECTOR_H_
