// include/phonesv/dsp/frontend.h

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

#ifndef PHONESV_DSP_FRONTEND_H_
#define PHONESV_DSP_FRONTEND_H_

#include <filesystem>

#include "phonesv/dsp/audio.h"
#include "phonesv/dsp/mel_fbank.h"

namespace phonesv {

// mono clip -> 300-3400 Hz band-pass -> 8 kHz -> 40-dim log-mel frames.
FeatureMatrix TelephoneFeatures(const AudioClip &clip);

FeatureMatrix TelephoneFeaturesFromFile(const std::filesystem::path &wav);

}  // namespace phonesv

#endif  // PHONESV_DSP_FRONTEND_H_
