// tools/synthetic_corpus.cc

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

#include "synthetic_corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "phonesv/base/error.h"
#include "phonesv/dsp/frontend.h"
#include "phonesv/dsp/mel_fbank.h"
#include "phonesv/dsp/resample.h"
#include "phonesv/posterior/posteriorgram.h"

namespace phonesv {
namespace {

double Uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double Gaussian(std::mt19937_64 &rng) {
  double u1 = std::max(Uniform(rng), 1e-300), u2 = Uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::size_t Below(std::mt19937_64 &rng, std::size_t n) { return rng() % n; }

std::size_t FramesFor(std::size_t samples, int rate) {
  std::size_t n8 = PolyphaseResampler(rate, kTelephoneRate).OutputLength(samples);
  return NumFrames(n8, MelFbankOptions{});
}

}  // namespace

double CalibrateNoiseSigma(int sample_rate, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(static_cast<std::size_t>(sample_rate) * 4);
  for (double &s : clip.samples) s = 0.1 * Gaussian(rng);
  FeatureMatrix f = TelephoneFeatures(clip);
  double worst = 0.0;
  for (std::size_t d = 0; d < f.cols(); ++d) {
    double sum = 0.0, sq = 0.0;
    // skip the filter start-up transient
    std::size_t t0 = std::min<std::size_t>(10, f.rows() - 1);
    for (std::size_t t = t0; t < f.rows(); ++t) sum += f(t, d);
    double n = static_cast<double>(f.rows() - t0);
    double mean = sum / n;
    for (std::size_t t = t0; t < f.rows(); ++t)
      sq += (f(t, d) - mean) * (f(t, d) - mean);
    worst = std::max(worst, std::sqrt(sq / n));
  }
  return worst;
}

SyntheticCorpus WriteSyntheticCorpus(const std::filesystem::path &dir,
                                     const SyntheticCorpusOptions &opts) {
  if (opts.speakers_per_class < 1 || opts.utterances_per_speaker < 1 ||
      opts.seconds <= 0.1 || opts.min_block_frames < 1 ||
      opts.max_block_frames < opts.min_block_frames)
    throw ValidationError("invalid synthetic corpus options");
  std::filesystem::create_directories(dir);

  const PhonemeInventory inv = PhonemeInventory::Default();
  std::vector<std::string> labels = inv.phones();
  labels.push_back(std::string(kDefaultSilenceLabel));
  const std::size_t columns = labels.size();
  const std::size_t silence = columns - 1;

  SyntheticCorpus corpus;
  corpus.sigma = CalibrateNoiseSigma(opts.sample_rate, opts.seed ^ 0x5a5a);
  corpus.log_gain = opts.shift_sigmas * corpus.sigma;

  std::mt19937_64 rng(opts.seed);
  const auto samples =
      static_cast<std::size_t>(std::llround(opts.seconds * opts.sample_rate));
  const std::size_t frames = FramesFor(samples, opts.sample_rate);
  // one 10 ms frame shift at the source rate
  const std::size_t hop = static_cast<std::size_t>(opts.sample_rate / 100);

  std::ofstream manifest(dir / "manifest.csv");
  manifest << "utterance_id,speaker_id,label,audio_path,posteriorgram_path\n";
  for (int s = 0; s < 2 * opts.speakers_per_class; ++s) {
    const bool positive = s < opts.speakers_per_class;
    char spk[32];
    std::snprintf(spk, sizeof spk, "%s%02d", positive ? "p" : "n",
                  positive ? s + 1 : s - opts.speakers_per_class + 1);
    (positive ? corpus.positive_speakers : corpus.negative_speakers)
        .push_back(spk);
    const double speaker_gain =
        std::exp(opts.speaker_gain_spread * (2.0 * Uniform(rng) - 1.0));

    for (int u = 0; u < opts.utterances_per_speaker; ++u) {
      const std::string utt = std::string(spk) + "_" + std::to_string(u + 1);
      Posteriorgram pg;
      pg.labels = labels;
      pg.probs = Matrix(frames, columns);
      AudioClip clip;
      clip.sample_rate = opts.sample_rate;
      clip.samples.resize(samples);
      for (double &x : clip.samples) x = 0.05 * speaker_gain * Gaussian(rng);

      const double spread = (1.0 - opts.peak_posterior) / (columns - 1);
      std::size_t t = 0;
      while (t < frames) {
        std::size_t len = opts.min_block_frames +
                          Below(rng, opts.max_block_frames -
                                         opts.min_block_frames + 1);
        len = std::min(len, frames - t);
        std::size_t phone;
        if (Uniform(rng) < opts.silence_fraction) {
          phone = silence;
        } else {
          const auto &classes = AllPhoneClasses();
          auto members = inv.ClassIndices(classes[Below(rng, classes.size())]);
          phone = members[Below(rng, members.size())];
        }
        for (std::size_t f = t; f < t + len; ++f)
          for (std::size_t c = 0; c < columns; ++c)
            pg.probs(f, c) = c == phone ? opts.peak_posterior : spread;
        if (positive && phone != silence &&
            inv.ClassOf(phone) == opts.signal_class) {
          const double gain = std::exp(corpus.log_gain);
          std::size_t begin = t * hop;
          std::size_t end = t + len == frames ? samples
                                              : std::min(samples, (t + len) * hop);
          for (std::size_t i = begin; i < end; ++i) clip.samples[i] *= gain;
        }
        t += len;
      }
      WriteWav16(dir / (utt + ".wav"), clip);
      WritePosteriorgram(dir / (utt + ".pgv"), pg);
      manifest << utt << ',' << spk << ','
               << (positive ? "positive" : "negative") << ',' << utt
               << ".wav," << utt << ".pgv\n";
    }
  }
  corpus.manifest = dir / "manifest.csv";
  return corpus;
}

}  // namespace phonesv
