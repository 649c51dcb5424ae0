// src/dsp/telephone_filter.cc

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

#include "phonesv/dsp/telephone_filter.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

// Q of each biquad in an even-order Butterworth prototype: the pole pairs
// sit at angles (2k + 1) * pi / (2 * order) from the imaginary axis.
std::vector<double> ButterworthQs(int order) {
  if (order < 2 || order % 2 != 0)
    throw ValidationError("Butterworth order must be even and >= 2, got " +
                          std::to_string(order));
  std::vector<double> qs;
  for (int k = 0; k < order / 2; ++k) {
    double theta = std::numbers::pi * (2 * k + 1) / (2.0 * order);
    qs.push_back(1.0 / (2.0 * std::cos(theta)));
  }
  return qs;
}

void CheckCutoff(double cutoff_hz, double rate_hz) {
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < rate_hz / 2.0))
    throw ValidationError("cutoff " + std::to_string(cutoff_hz) +
                          " Hz outside (0, Nyquist) for rate " +
                          std::to_string(rate_hz));
}

}  // namespace

BiquadCoeffs BiquadCoeffs::LowPass(double cutoff_hz, double q,
                                   double rate_hz) {
  CheckCutoff(cutoff_hz, rate_hz);
  double w0 = 2.0 * std::numbers::pi * cutoff_hz / rate_hz;
  double cw = std::cos(w0), alpha = std::sin(w0) / (2.0 * q);
  double a0 = 1.0 + alpha;
  BiquadCoeffs c;
  c.b0 = (1.0 - cw) / 2.0 / a0;
  c.b1 = (1.0 - cw) / a0;
  c.b2 = c.b0;
  c.a1 = -2.0 * cw / a0;
  c.a2 = (1.0 - alpha) / a0;
  return c;
}

BiquadCoeffs BiquadCoeffs::HighPass(double cutoff_hz, double q,
                                    double rate_hz) {
  CheckCutoff(cutoff_hz, rate_hz);
  double w0 = 2.0 * std::numbers::pi * cutoff_hz / rate_hz;
  double cw = std::cos(w0), alpha = std::sin(w0) / (2.0 * q);
  double a0 = 1.0 + alpha;
  BiquadCoeffs c;
  c.b0 = (1.0 + cw) / 2.0 / a0;
  c.b1 = -(1.0 + cw) / a0;
  c.b2 = c.b0;
  c.a1 = -2.0 * cw / a0;
  c.a2 = (1.0 - alpha) / a0;
  return c;
}

void BiquadCascade::AddButterworthLowPass(int order, double cutoff_hz,
                                          double rate_hz) {
  for (double q : ButterworthQs(order))
    sections_.push_back(BiquadCoeffs::LowPass(cutoff_hz, q, rate_hz));
}

void BiquadCascade::AddButterworthHighPass(int order, double cutoff_hz,
                                           double rate_hz) {
  for (double q : ButterworthQs(order))
    sections_.push_back(BiquadCoeffs::HighPass(cutoff_hz, q, rate_hz));
}

std::vector<double> BiquadCascade::Filter(std::span<const double> input) const {
  std::vector<double> out(input.begin(), input.end());
  for (const BiquadCoeffs &s : sections_) {
    double z1 = 0.0, z2 = 0.0;
    for (double &v : out) {
      double x = v;
      double y = s.b0 * x + z1;
      z1 = s.b1 * x - s.a1 * y + z2;
      z2 = s.b2 * x - s.a2 * y;
      v = y;
    }
  }
  return out;
}

double BiquadCascade::MagnitudeAt(double freq_hz, double rate_hz) const {
  const double w = 2.0 * std::numbers::pi * freq_hz / rate_hz;
  const std::complex<double> z1 = std::polar(1.0, -w), z2 = z1 * z1;
  double mag = 1.0;
  for (const BiquadCoeffs &s : sections_) {
    auto num = s.b0 + s.b1 * z1 + s.b2 * z2;
    auto den = 1.0 + s.a1 * z1 + s.a2 * z2;
    mag *= std::abs(num / den);
  }
  return mag;
}

BiquadCascade TelephoneBandpassFilter(double rate_hz) {
  BiquadCascade cascade;
  cascade.AddButterworthHighPass(kTelephoneFilterOrder, kTelephoneLowHz,
                                 rate_hz);
  cascade.AddButterworthLowPass(kTelephoneFilterOrder, kTelephoneHighHz,
                                rate_hz);
  return cascade;
}

AudioClip BandpassTelephone(const AudioClip &clip) {
  if (clip.sample_rate < 8000)
    throw ValidationError("band-pass needs a sample rate >= 8000 Hz, got " +
                          std::to_string(clip.sample_rate));
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples = TelephoneBandpassFilter(clip.sample_rate).Filter(clip.samples);
  return out;
}

}  // namespace phonesv
