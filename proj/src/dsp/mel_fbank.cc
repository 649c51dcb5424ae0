// src/dsp/mel_fbank.cc

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

#include "phonesv/dsp/mel_fbank.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "phonesv/base/error.h"

namespace phonesv {

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::size_t NumFrames(std::size_t num_samples, const MelFbankOptions &opts) {
  auto len = static_cast<std::size_t>(opts.frame_length);
  if (num_samples < len) return 0;
  return 1 + (num_samples - len) / static_cast<std::size_t>(opts.frame_shift);
}

void Fft(std::span<std::complex<double>> data) {
  const std::size_t n = data.size();
  if (!std::has_single_bit(n))
    throw ValidationError("FFT size must be a power of two, got " +
                          std::to_string(n));
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        auto w = std::polar(1.0, angle * static_cast<double>(k));
        auto u = data[start + k];
        auto v = data[start + k + len / 2] * w;
        data[start + k] = u + v;
        data[start + k + len / 2] = u - v;
      }
    }
  }
}

MelFbank::MelFbank(const MelFbankOptions &opts) : opts_(opts) {
  if (opts.frame_length <= 1 || opts.frame_shift <= 0 ||
      opts.frame_length > opts.fft_size || opts.num_bins <= 0 ||
      !(opts.high_hz > opts.low_hz) ||
      opts.high_hz > opts.sample_rate / 2.0)
    throw ValidationError("invalid mel filterbank options");

  window_.resize(opts.frame_length);
  for (int i = 0; i < opts.frame_length; ++i)
    window_[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i /
                                        (opts.frame_length - 1));

  const int num_fft_bins = opts.fft_size / 2 + 1;
  filters_ = Matrix(opts.num_bins, num_fft_bins);
  const double mel_low = HzToMel(opts.low_hz);
  const double mel_step =
      (HzToMel(opts.high_hz) - mel_low) / (opts.num_bins + 1);
  for (int m = 0; m < opts.num_bins; ++m) {
    double left = mel_low + m * mel_step;
    double center = left + mel_step;
    double right = center + mel_step;
    for (int k = 0; k < num_fft_bins; ++k) {
      double mel = HzToMel(static_cast<double>(k) * opts.sample_rate /
                           opts.fft_size);
      double w = 0.0;
      if (mel > left && mel <= center)
        w = (mel - left) / (center - left);
      else if (mel > center && mel < right)
        w = (right - mel) / (right - center);
      filters_(m, k) = w;
    }
  }
}

FeatureMatrix MelFbank::Compute(const AudioClip &clip) const {
  if (clip.sample_rate != opts_.sample_rate)
    throw ValidationError("mel filterbank expects " +
                          std::to_string(opts_.sample_rate) + " Hz audio, got " +
                          std::to_string(clip.sample_rate));
  const std::size_t num_frames = NumFrames(clip.samples.size(), opts_);
  if (num_frames == 0)
    throw ValidationError("clip of " + std::to_string(clip.samples.size()) +
                          " samples is shorter than one frame (" +
                          std::to_string(opts_.frame_length) + ")");

  const std::size_t num_fft_bins = filters_.cols();
  FeatureMatrix feats(num_frames, static_cast<std::size_t>(opts_.num_bins));
  std::vector<std::complex<double>> buf(opts_.fft_size);
  std::vector<double> magnitude(num_fft_bins);
  for (std::size_t t = 0; t < num_frames; ++t) {
    const double *frame = clip.samples.data() + t * opts_.frame_shift;
    std::fill(buf.begin(), buf.end(), std::complex<double>{});
    for (int i = 0; i < opts_.frame_length; ++i) buf[i] = frame[i] * window_[i];
    Fft(buf);
    for (std::size_t k = 0; k < num_fft_bins; ++k)
      magnitude[k] = std::abs(buf[k]);
    auto row = feats.Row(t);
    for (std::size_t m = 0; m < row.size(); ++m) {
      auto w = filters_.Row(m);
      double energy = 0.0;
      for (std::size_t k = 0; k < num_fft_bins; ++k) energy += w[k] * magnitude[k];
      row[m] = std::log(std::max(energy, opts_.log_floor));
    }
  }
  return feats;
}

}  // namespace phonesv
