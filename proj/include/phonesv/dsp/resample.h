// include/phonesv/dsp/resample.h

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

#ifndef PHONESV_DSP_RESAMPLE_H_
#define PHONESV_DSP_RESAMPLE_H_

#include <cstddef>
#include <vector>

#include "phonesv/dsp/audio.h"

namespace phonesv {

inline constexpr int kTelephoneRate = 8000;

// Rational-ratio polyphase resampler with a Kaiser-windowed sinc kernel.
// Only downsampling (or identity) is supported.
class PolyphaseResampler {
 public:
  struct Options {
    double cutoff_hz = 0.45 * kTelephoneRate;
    // Half-width of the kernel, counted in zero crossings of the sinc.
    int zero_crossings = 50;
    double kaiser_beta = 8.6;
  };

  PolyphaseResampler(int input_rate, int output_rate, Options opts);
  PolyphaseResampler(int input_rate, int output_rate)
      : PolyphaseResampler(input_rate, output_rate, Options{}) {}

  // Output length is round(n * output_rate / input_rate).
  std::size_t OutputLength(std::size_t input_length) const;

  std::vector<double> Resample(const std::vector<double> &input) const;

  int up() const { return up_; }
  int down() const { return down_; }

 private:
  double Kernel(double tau) const;
  const double *PhaseTaps(std::size_t phase, std::vector<double> &scratch) const;

  int input_rate_, output_rate_;
  int up_, down_;         // output/input = up/down in lowest terms
  double fc_;             // cutoff in cycles per input sample
  double half_width_;     // in input samples
  double beta_, i0_beta_;
  int reach_;             // taps span [-reach_, reach_] around the base index
  std::vector<double> table_;  // up_ x (2 * reach_ + 1), empty if too large
};

// Downsamples to 8 kHz. A clip already at 8 kHz is returned unchanged.
// Throws ValidationError when the rate is below 8 kHz.
AudioClip Resample8k(const AudioClip &clip);

}  // namespace phonesv

#endif  // PHONESV_DSP_RESAMPLE_H_
