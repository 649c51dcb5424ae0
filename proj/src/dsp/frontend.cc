// src/dsp/frontend.cc

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

#include "phonesv/dsp/frontend.h"

#include "phonesv/dsp/resample.h"
#include "phonesv/dsp/telephone_filter.h"

namespace phonesv {

FeatureMatrix TelephoneFeatures(const AudioClip &clip) {
  static const MelFbank fbank;
  return fbank.Compute(Resample8k(BandpassTelephone(clip)));
}

FeatureMatrix TelephoneFeaturesFromFile(const std::filesystem::path &wav) {
  return TelephoneFeatures(LoadAudio(wav));
}

}  // namespace phonesv
