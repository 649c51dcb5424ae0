// include/phonesv/dsp/mel_fbank.h

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

#ifndef PHONESV_DSP_MEL_FBANK_H_
#define PHONESV_DSP_MEL_FBANK_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "phonesv/base/matrix.h"
#include "phonesv/dsp/audio.h"

namespace phonesv {

// T x D log filterbank energies, one row per frame.
using FeatureMatrix = Matrix;

inline constexpr int kNumMelBins = 40;

struct MelFbankOptions {
  int sample_rate = 8000;
  int frame_length = 200;  // 25 ms
  int frame_shift = 80;    // 10 ms
  int fft_size = 256;
  int num_bins = kNumMelBins;
  double low_hz = 0.0;
  double high_hz = 4000.0;
  double log_floor = 1e-10;
};

double HzToMel(double hz);
double MelToHz(double mel);

// Number of frames for `num_samples` samples; 0 if shorter than one frame.
std::size_t NumFrames(std::size_t num_samples, const MelFbankOptions &opts);

// In-place iterative radix-2 FFT; size must be a power of two.
void Fft(std::span<std::complex<double>> data);

// Hamming window -> |FFT| -> triangular mel filters -> log(max(e, floor)).
// No pre-emphasis, dithering or mean normalization.
class MelFbank {
 public:
  explicit MelFbank(const MelFbankOptions &opts = {});

  // Throws ValidationError if the rate does not match or the clip is
  // shorter than one frame.
  FeatureMatrix Compute(const AudioClip &clip) const;

  const MelFbankOptions &options() const { return opts_; }
  const std::vector<double> &window() const { return window_; }
  // num_bins x (fft_size / 2 + 1) filter weights.
  const Matrix &filters() const { return filters_; }

 private:
  MelFbankOptions opts_;
  std::vector<double> window_;
  Matrix filters_;
};

}  // namespace phonesv

#endif  // PHONESV_DSP_MEL_FBANK_H_
