// include/phonesv/cli/manifest.h

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

#ifndef PHONESV_CLI_MANIFEST_H_
#define PHONESV_CLI_MANIFEST_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phonesv/pooling/supervector.h"

namespace phonesv {

struct ManifestRecord {
  std::string utterance_id;
  std::string speaker_id;
  Label label = Label::kUnknown;
  std::filesystem::path audio_path;          // resolved
  std::filesystem::path posteriorgram_path;  // resolved
};

// CSV with a header naming at least utterance_id, speaker_id, label,
// audio_path and posteriorgram_path (any order, extra columns ignored).
// Labels are "positive" or "negative". Relative paths resolve against the
// manifest's directory.
struct DatasetManifest {
  std::filesystem::path source;
  std::vector<ManifestRecord> records;
};

DatasetManifest ReadManifest(const std::filesystem::path &path);
DatasetManifest ParseManifest(std::string_view text,
                              const std::filesystem::path &base_dir);

std::string_view LabelName(Label label);

// Problems with the manifest: duplicate utterance ids, paths shared between
// records, speakers with conflicting labels, and (optionally) missing files.
std::vector<std::string> ManifestProblems(const DatasetManifest &manifest,
                                          bool check_files);

struct ManifestSummary {
  std::size_t utterances = 0;
  std::size_t speakers = 0;
  std::map<Label, std::size_t> utterances_by_label;
  std::map<Label, std::size_t> speakers_by_label;
  std::map<std::string, std::size_t> utterances_by_speaker;
};

ManifestSummary Summarize(const DatasetManifest &manifest);

// Speaker ids present in both manifests.
std::vector<std::string> SharedSpeakers(const DatasetManifest &a,
                                        const DatasetManifest &b);

}  // namespace phonesv

#endif  // PHONESV_CLI_MANIFEST_H_
