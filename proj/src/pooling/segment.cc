// src/pooling/segment.cc

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

#include "phonesv/pooling/segment.h"

#include <cmath>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {

SegmentSpec SegmentSpec::FromSeconds(double window_seconds,
                                     double shift_seconds,
                                     double frame_shift_seconds) {
  if (!(frame_shift_seconds > 0.0) || !(shift_seconds > 0.0) ||
      !(window_seconds > shift_seconds))
    throw ValidationError("segment spec needs window > shift > 0 (window " +
                          std::to_string(window_seconds) + " s, shift " +
                          std::to_string(shift_seconds) + " s)");
  SegmentSpec spec;
  spec.window_frames = static_cast<std::size_t>(
      std::llround(window_seconds / frame_shift_seconds));
  spec.shift_frames = static_cast<std::size_t>(
      std::llround(shift_seconds / frame_shift_seconds));
  if (spec.shift_frames == 0 || spec.window_frames <= spec.shift_frames)
    throw ValidationError("segment spec rounds to fewer frames than needed");
  return spec;
}

std::vector<FrameRange> SegmentRanges(std::size_t num_frames,
                                      const SegmentSpec &spec) {
  if (num_frames == 0) return {};
  if (num_frames < spec.window_frames) return {{0, num_frames}};
  std::vector<FrameRange> ranges;
  for (std::size_t b = 0; b + spec.window_frames <= num_frames;
       b += spec.shift_frames)
    ranges.push_back({b, spec.window_frames});
  return ranges;
}

std::vector<Segment> SegmentUtterance(const FeatureMatrix &feats,
                                      const Posteriorgram &pg,
                                      const SegmentSpec &spec) {
  if (feats.rows() != pg.num_frames())
    throw ValidationError("cannot segment unaligned features (" +
                          std::to_string(feats.rows()) + " vs " +
                          std::to_string(pg.num_frames()) + " frames)");
  std::vector<Segment> out;
  for (const FrameRange &r : SegmentRanges(feats.rows(), spec)) {
    Segment seg;
    seg.feats = feats.RowRange(r.begin, r.count);
    seg.posteriors.probs = pg.probs.RowRange(r.begin, r.count);
    seg.posteriors.labels = pg.labels;
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace phonesv
