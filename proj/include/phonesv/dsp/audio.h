// include/phonesv/dsp/audio.h

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

#ifndef PHONESV_DSP_AUDIO_H_
#define PHONESV_DSP_AUDIO_H_

#include <filesystem>
#include <vector>

namespace phonesv {

// Mono audio with amplitudes in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;

  double DurationSeconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Reads a RIFF/WAVE file: PCM 8/16/24/32-bit integer or 32-bit IEEE float,
// one or two channels (averaged to mono). Integer PCM is divided by its
// full-scale value (128, 32768, ...). Throws ValidationError on anything
// else, including a file with no samples.
AudioClip LoadAudio(const std::filesystem::path &path);

// Writes 16-bit mono PCM. Samples are clipped to [-1, 1) before scaling.
void WriteWav16(const std::filesystem::path &path, const AudioClip &clip);

// Writes 16-bit PCM with explicit channel data (all channels same length).
void WriteWav16(const std::filesystem::path &path,
                const std::vector<std::vector<double>> &channels,
                int sample_rate);

}  // namespace phonesv

#endif  // PHONESV_DSP_AUDIO_H_
