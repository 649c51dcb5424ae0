// tools/phonesv_synth.cc

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

// Writes a synthetic corpus (wav + posteriorgram + manifest.csv).

#include <iostream>

#include "CLI11.hpp"
#include "phonesv/base/error.h"
#include "synthetic_corpus.h"

int main(int argc, char **argv) {
  CLI::App app{"Generate a synthetic phonesv corpus"};
  std::string out, signal_class = "nasals";
  phonesv::SyntheticCorpusOptions opts;
  app.add_option("--out", out, "Output directory")->required();
  app.add_option("--speakers-per-class", opts.speakers_per_class);
  app.add_option("--utterances", opts.utterances_per_speaker);
  app.add_option("--seconds", opts.seconds);
  app.add_option("--shift-sigmas", opts.shift_sigmas);
  app.add_option("--signal-class", signal_class);
  app.add_option("--seed", opts.seed);
  app.add_option("--speaker-gain-spread", opts.speaker_gain_spread);
  CLI11_PARSE(app, argc, argv);
  try {
    auto cls = phonesv::ParsePhoneClass(signal_class);
    if (!cls) throw phonesv::ValidationError("unknown class " + signal_class);
    opts.signal_class = *cls;
    auto corpus = phonesv::WriteSyntheticCorpus(out, opts);
    std::cout << corpus.manifest.string() << "\nsigma = " << corpus.sigma
              << "\nlog_gain = " << corpus.log_gain << '\n';
  } catch (const phonesv::ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
