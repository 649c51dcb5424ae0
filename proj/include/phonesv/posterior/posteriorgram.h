// include/phonesv/posterior/posteriorgram.h

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

#ifndef PHONESV_POSTERIOR_POSTERIORGRAM_H_
#define PHONESV_POSTERIOR_POSTERIORGRAM_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "phonesv/base/matrix.h"
#include "phonesv/dsp/mel_fbank.h"

namespace phonesv {

// T x M frame posteriors; probs(j, i) is the posterior of labels[i] at
// frame j.
struct Posteriorgram {
  Matrix probs;
  std::vector<std::string> labels;

  std::size_t num_frames() const { return probs.rows(); }
  std::size_t num_phones() const { return probs.cols(); }
};

inline constexpr std::string_view kDefaultSilenceLabel = "sil";
inline constexpr std::size_t kMaxFrameMismatch = 5;
inline constexpr double kRowSumTolerance = 0.01;

// PGV1 binary format, little-endian:
//   "PGV1" | uint32 T | uint32 M | M x (uint16 len, bytes) | T*M float32
void WritePosteriorgram(const std::filesystem::path &path,
                        const Posteriorgram &pg);

// Reads a PGV1 file without semantic checks beyond the header and
// finiteness of the values.
Posteriorgram ReadPosteriorgram(const std::filesystem::path &path);

// Throws ValidationError if an entry falls outside [0, 1] or a row sum
// falls outside [1 - tol, 1 + tol].
void ValidatePosteriorgram(const Posteriorgram &pg,
                           double row_sum_tolerance = kRowSumTolerance);

// ReadPosteriorgram + ValidatePosteriorgram, then reconciles the frame
// count with `expected_frames` (the paired feature matrix): a difference of
// at most 5 frames trims to the shorter length, more is an error.
Posteriorgram LoadPosteriorgram(const std::filesystem::path &path,
                                std::size_t expected_frames);

// Trims both to the shorter length if they differ by <= max_mismatch.
void AlignFrames(FeatureMatrix &feats, Posteriorgram &pg,
                 std::size_t max_mismatch = kMaxFrameMismatch);

// Drops the silence column (case-insensitive match). Remaining columns are
// not renormalized. Throws ValidationError if no such column exists.
Posteriorgram StripSilence(const Posteriorgram &pg,
                           std::string_view silence_label = kDefaultSilenceLabel);

}  // namespace phonesv

#endif  // PHONESV_POSTERIOR_POSTERIORGRAM_H_
