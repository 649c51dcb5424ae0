// tools/synthetic_corpus.h

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

#ifndef PHONESV_TOOLS_SYNTHETIC_CORPUS_H_
#define PHONESV_TOOLS_SYNTHETIC_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "phonesv/posterior/phone_inventory.h"

namespace phonesv {

// Speakers of band-limited white noise with block-structured posteriors.
// Every frame block is labelled with one phone (or silence); positive
// speakers play the blocks of `signal_class` louder, which moves the
// log-mel means of those phones by `shift_sigmas` frame-level standard
// deviations.
struct SyntheticCorpusOptions {
  int speakers_per_class = 10;
  int utterances_per_speaker = 5;
  double seconds = 4.0;
  int sample_rate = 16000;
  double shift_sigmas = 1.5;
  PhoneClass signal_class = PhoneClass::kNasals;
  double silence_fraction = 0.1;
  double peak_posterior = 0.8;  // the rest is spread over the other columns
  int min_block_frames = 5;
  int max_block_frames = 15;
  double speaker_gain_spread = 0.03;  // log-gain, uniform +-
  std::uint64_t seed = 7;
};

struct SyntheticCorpus {
  std::filesystem::path manifest;
  double sigma = 0.0;       // frame-level log-mel std used for the shift
  double log_gain = 0.0;    // shift applied to signal_class blocks
  std::vector<std::string> positive_speakers;
  std::vector<std::string> negative_speakers;
};

// Frame-level log-mel standard deviation of unit white noise run through
// the telephone front end, maximised over mel bins.
double CalibrateNoiseSigma(int sample_rate, std::uint64_t seed);

// Writes wav/pgv files and manifest.csv under `dir` (created if needed).
SyntheticCorpus WriteSyntheticCorpus(const std::filesystem::path &dir,
                                     const SyntheticCorpusOptions &opts);

}  // namespace phonesv

#endif  // PHONESV_TOOLS_SYNTHETIC_CORPUS_H_
