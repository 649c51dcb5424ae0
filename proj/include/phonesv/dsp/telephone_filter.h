// include/phonesv/dsp/telephone_filter.h

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

#ifndef PHONESV_DSP_TELEPHONE_FILTER_H_
#define PHONESV_DSP_TELEPHONE_FILTER_H_

#include <span>
#include <vector>

#include "phonesv/dsp/audio.h"

namespace phonesv {

// Second-order IIR section, normalized so that a0 == 1.
struct BiquadCoeffs {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  // Bilinear-transform low/high-pass sections with the prototype's
  // analog frequency prewarped to `cutoff_hz`.
  static BiquadCoeffs LowPass(double cutoff_hz, double q, double rate_hz);
  static BiquadCoeffs HighPass(double cutoff_hz, double q, double rate_hz);
};

// Cascade of biquads run in transposed direct form II with zero initial
// state. Each call to Filter() starts from rest.
class BiquadCascade {
 public:
  BiquadCascade() = default;
  explicit BiquadCascade(std::vector<BiquadCoeffs> sections)
      : sections_(std::move(sections)) {}

  // Appends the sections of an even-order Butterworth low/high-pass.
  void AddButterworthLowPass(int order, double cutoff_hz, double rate_hz);
  void AddButterworthHighPass(int order, double cutoff_hz, double rate_hz);

  std::vector<double> Filter(std::span<const double> input) const;

  // |H(e^{jw})| at `freq_hz`.
  double MagnitudeAt(double freq_hz, double rate_hz) const;

  const std::vector<BiquadCoeffs> &sections() const { return sections_; }

 private:
  std::vector<BiquadCoeffs> sections_;
};

inline constexpr double kTelephoneLowHz = 300.0;
inline constexpr double kTelephoneHighHz = 3400.0;
inline constexpr int kTelephoneFilterOrder = 4;

// 4th-order Butterworth high-pass at 300 Hz followed by a 4th-order
// Butterworth low-pass at 3400 Hz, designed for `rate_hz`.
BiquadCascade TelephoneBandpassFilter(double rate_hz);

// Applies the telephone band-pass. Same length and rate as the input.
// Throws ValidationError when the rate is below 8 kHz.
AudioClip BandpassTelephone(const AudioClip &clip);

}  // namespace phonesv

#endif  // PHONESV_DSP_TELEPHONE_FILTER_H_
