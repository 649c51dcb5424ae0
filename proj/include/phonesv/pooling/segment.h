// include/phonesv/pooling/segment.h

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

#ifndef PHONESV_POOLING_SEGMENT_H_
#define PHONESV_POOLING_SEGMENT_H_

#include <cstddef>
#include <vector>

#include "phonesv/dsp/mel_fbank.h"
#include "phonesv/posterior/posteriorgram.h"

namespace phonesv {

// Sliding window over frames. Defaults: 3 s windows every 0.1 s at a
// 10 ms frame shift.
struct SegmentSpec {
  std::size_t window_frames = 300;
  std::size_t shift_frames = 10;

  // Rounds each duration to whole frames; throws ValidationError unless
  // window > shift > 0.
  static SegmentSpec FromSeconds(double window_seconds, double shift_seconds,
                                 double frame_shift_seconds = 0.01);
};

struct FrameRange {
  std::size_t begin = 0;
  std::size_t count = 0;
};

// Window starts for a T-frame utterance: floor((T - W) / S) + 1 windows
// when T >= W, otherwise a single range covering the whole utterance.
std::vector<FrameRange> SegmentRanges(std::size_t num_frames,
                                      const SegmentSpec &spec);

struct Segment {
  FeatureMatrix feats;
  Posteriorgram posteriors;
};

// Cuts aligned features and posteriors into the windows of SegmentRanges.
std::vector<Segment> SegmentUtterance(const FeatureMatrix &feats,
                                      const Posteriorgram &pg,
                                      const SegmentSpec &spec);

}  // namespace phonesv

#endif  // PHONESV_POOLING_SEGMENT_H_
