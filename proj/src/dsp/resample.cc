// src/dsp/resample.cc

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

#include "phonesv/dsp/resample.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

constexpr std::size_t kMaxTableEntries = 1 << 21;

}  // namespace

PolyphaseResampler::PolyphaseResampler(int input_rate, int output_rate,
                                       Options opts)
    : input_rate_(input_rate), output_rate_(output_rate) {
  if (input_rate <= 0 || output_rate <= 0)
    throw ValidationError("resampler rates must be positive");
  if (output_rate > input_rate)
    throw ValidationError("resampler only downsamples: " +
                          std::to_string(input_rate) + " -> " +
                          std::to_string(output_rate));
  int g = std::gcd(input_rate, output_rate);
  up_ = output_rate / g;
  down_ = input_rate / g;
  fc_ = opts.cutoff_hz / input_rate;
  half_width_ = opts.zero_crossings / (2.0 * fc_);
  beta_ = opts.kaiser_beta;
  i0_beta_ = std::cyl_bessel_i(0.0, beta_);
  reach_ = static_cast<int>(std::ceil(half_width_)) + 1;

  const std::size_t width = 2 * static_cast<std::size_t>(reach_) + 1;
  if (static_cast<std::size_t>(up_) * width <= kMaxTableEntries) {
    table_.resize(static_cast<std::size_t>(up_) * width);
    for (int p = 0; p < up_; ++p) {
      double frac = static_cast<double>(p) / up_;
      for (int j = -reach_; j <= reach_; ++j)
        table_[p * width + (j + reach_)] = Kernel(frac - j);
    }
  }
}

double PolyphaseResampler::Kernel(double tau) const {
  double u = tau / half_width_;
  if (std::abs(u) >= 1.0) return 0.0;
  double x = 2.0 * fc_ * tau;
  double sinc = x == 0.0 ? 1.0
                         : std::sin(std::numbers::pi * x) /
                               (std::numbers::pi * x);
  double window = std::cyl_bessel_i(0.0, beta_ * std::sqrt(1.0 - u * u)) /
                  i0_beta_;
  return 2.0 * fc_ * sinc * window;
}

const double *PolyphaseResampler::PhaseTaps(std::size_t phase,
                                            std::vector<double> &scratch) const {
  const std::size_t width = 2 * static_cast<std::size_t>(reach_) + 1;
  if (!table_.empty()) return table_.data() + phase * width;
  scratch.resize(width);
  double frac = static_cast<double>(phase) / up_;
  for (int j = -reach_; j <= reach_; ++j) scratch[j + reach_] = Kernel(frac - j);
  return scratch.data();
}

std::size_t PolyphaseResampler::OutputLength(std::size_t input_length) const {
  // round(n * up / down) in integer arithmetic
  auto n = static_cast<unsigned long long>(input_length);
  return static_cast<std::size_t>((2 * n * up_ + down_) / (2ULL * down_));
}

std::vector<double> PolyphaseResampler::Resample(
    const std::vector<double> &input) const {
  const std::size_t out_len = OutputLength(input.size());
  std::vector<double> out(out_len);
  std::vector<double> scratch;
  const auto n_in = static_cast<long long>(input.size());
  for (std::size_t n = 0; n < out_len; ++n) {
    // Output sample n sits at input position n * down / up.
    unsigned long long pos = static_cast<unsigned long long>(n) * down_;
    long long base = static_cast<long long>(pos / up_);
    std::size_t phase = pos % up_;
    const double *taps = PhaseTaps(phase, scratch);
    double acc = 0.0;
    long long lo = std::max<long long>(base - reach_, 0);
    long long hi = std::min<long long>(base + reach_, n_in - 1);
    for (long long k = lo; k <= hi; ++k)
      acc += taps[k - base + reach_] * input[k];
    out[n] = acc;
  }
  return out;
}

AudioClip Resample8k(const AudioClip &clip) {
  if (clip.sample_rate < kTelephoneRate)
    throw ValidationError("resampling to 8 kHz needs a rate >= 8000 Hz, got " +
                          std::to_string(clip.sample_rate));
  if (clip.sample_rate == kTelephoneRate) return clip;
  PolyphaseResampler resampler(clip.sample_rate, kTelephoneRate);
  AudioClip out;
  out.sample_rate = kTelephoneRate;
  out.samples = resampler.Resample(clip.samples);
  return out;
}

}  // namespace phonesv
