// src/posterior/posteriorgram.cc

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

#include "phonesv/posterior/posteriorgram.h"

#include <cmath>
#include <fstream>

#include "phonesv/base/binary_io.h"
#include "phonesv/base/error.h"
#include "phonesv/posterior/phone_inventory.h"

namespace phonesv {

void WritePosteriorgram(const std::filesystem::path &path,
                        const Posteriorgram &pg) {
  if (pg.labels.size() != pg.probs.cols())
    throw ValidationError("posteriorgram has " +
                          std::to_string(pg.labels.size()) + " labels for " +
                          std::to_string(pg.probs.cols()) + " columns");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ProcessingError("cannot write " + path.string());
  WriteMagic(os, "PGV1");
  WriteU32(os, static_cast<std::uint32_t>(pg.probs.rows()));
  WriteU32(os, static_cast<std::uint32_t>(pg.probs.cols()));
  for (const auto &label : pg.labels) WriteShortString(os, label);
  for (double v : pg.probs.data()) WriteF32(os, static_cast<float>(v));
  if (!os) throw ProcessingError("error writing " + path.string());
}

Posteriorgram ReadPosteriorgram(const std::filesystem::path &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("cannot open posteriorgram " + path.string());
  const std::string name = path.string();
  ExpectMagic(is, "PGV1", name);
  std::uint32_t frames = ReadU32(is, name + " frame count");
  std::uint32_t phones = ReadU32(is, name + " phone count");
  if (frames == 0 || phones == 0)
    throw ValidationError(name + ": empty posteriorgram (T=" +
                          std::to_string(frames) + ", M=" +
                          std::to_string(phones) + ")");
  Posteriorgram pg;
  pg.labels.reserve(phones);
  for (std::uint32_t i = 0; i < phones; ++i)
    pg.labels.push_back(ReadShortString(is, name + " phone label"));
  pg.probs = Matrix(frames, phones);
  auto data = pg.probs.data();
  for (std::size_t k = 0; k < data.size(); ++k) {
    float v = ReadF32(is, name + " posterior values");
    if (!std::isfinite(v))
      throw ValidationError(name + ": non-finite posterior at frame " +
                            std::to_string(k / phones));
    data[k] = v;
  }
  return pg;
}

void ValidatePosteriorgram(const Posteriorgram &pg, double row_sum_tolerance) {
  for (std::size_t j = 0; j < pg.num_frames(); ++j) {
    double sum = 0.0;
    for (double v : pg.probs.Row(j)) {
      if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError("posterior " + std::to_string(v) +
                              " outside [0, 1] at frame " + std::to_string(j));
      sum += v;
    }
    if (std::abs(sum - 1.0) > row_sum_tolerance)
      throw ValidationError("posterior row " + std::to_string(j) + " sums to " +
                            std::to_string(sum));
  }
}

Posteriorgram LoadPosteriorgram(const std::filesystem::path &path,
                                std::size_t expected_frames) {
  Posteriorgram pg = ReadPosteriorgram(path);
  ValidatePosteriorgram(pg);
  std::size_t t = pg.num_frames();
  std::size_t diff = t > expected_frames ? t - expected_frames
                                         : expected_frames - t;
  if (diff > kMaxFrameMismatch)
    throw ValidationError(path.string() + ": " + std::to_string(t) +
                          " posterior frames vs " +
                          std::to_string(expected_frames) +
                          " feature frames (max mismatch " +
                          std::to_string(kMaxFrameMismatch) + ")");
  if (t > expected_frames) pg.probs.TrimRows(expected_frames);
  return pg;
}

void AlignFrames(FeatureMatrix &feats, Posteriorgram &pg,
                 std::size_t max_mismatch) {
  std::size_t a = feats.rows(), b = pg.num_frames();
  std::size_t diff = a > b ? a - b : b - a;
  if (diff > max_mismatch)
    throw ValidationError("frame count mismatch: " + std::to_string(a) +
                          " feature frames vs " + std::to_string(b) +
                          " posterior frames");
  std::size_t n = std::min(a, b);
  feats.TrimRows(n);
  pg.probs.TrimRows(n);
}

Posteriorgram StripSilence(const Posteriorgram &pg,
                           std::string_view silence_label) {
  const std::string sil = ToLower(silence_label);
  std::size_t sil_col = pg.labels.size();
  for (std::size_t i = 0; i < pg.labels.size(); ++i)
    if (ToLower(pg.labels[i]) == sil) {
      sil_col = i;
      break;
    }
  if (sil_col == pg.labels.size())
    throw ValidationError("posteriorgram has no '" + std::string(silence_label) +
                          "' column");

  Posteriorgram out;
  out.probs = Matrix(pg.num_frames(), pg.num_phones() - 1);
  for (std::size_t i = 0; i < pg.labels.size(); ++i)
    if (i != sil_col) out.labels.push_back(pg.labels[i]);
  for (std::size_t j = 0; j < pg.num_frames(); ++j) {
    auto in = pg.probs.Row(j);
    auto dst = out.probs.Row(j);
    for (std::size_t i = 0, o = 0; i < in.size(); ++i)
      if (i != sil_col) dst[o++] = in[i];
  }
  return out;
}

}  // namespace phonesv
