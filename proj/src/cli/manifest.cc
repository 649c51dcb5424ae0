// src/cli/manifest.cc

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

#include "phonesv/cli/manifest.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "phonesv/base/error.h"
#include "phonesv/posterior/phone_inventory.h"

namespace phonesv {
namespace {

// Splits one CSV line; supports double-quoted fields with "" escapes.
std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  for (auto &f : fields) {
    auto b = f.find_first_not_of(" \t\r");
    auto e = f.find_last_not_of(" \t\r");
    f = b == std::string::npos ? "" : f.substr(b, e - b + 1);
  }
  return fields;
}

constexpr std::array<std::string_view, 5> kColumns = {
    "utterance_id", "speaker_id", "label", "audio_path", "posteriorgram_path"};

}  // namespace

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kPositive: return "positive";
    case Label::kNegative: return "negative";
    default: return "unknown";
  }
}

DatasetManifest ParseManifest(std::string_view text,
                              const std::filesystem::path &base_dir) {
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  std::array<std::size_t, kColumns.size()> col{};
  bool have_header = false;
  DatasetManifest manifest;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    auto fields = SplitCsvLine(line);
    if (!have_header) {
      for (std::size_t c = 0; c < kColumns.size(); ++c) {
        auto it = std::find(fields.begin(), fields.end(), kColumns[c]);
        if (it == fields.end())
          throw ValidationError("manifest header lacks column '" +
                                std::string(kColumns[c]) + "'");
        col[c] = static_cast<std::size_t>(it - fields.begin());
      }
      have_header = true;
      continue;
    }
    auto field = [&](std::size_t c) -> const std::string & {
      if (col[c] >= fields.size())
        throw ValidationError("manifest line " + std::to_string(lineno) +
                              ": missing column '" + std::string(kColumns[c]) +
                              "'");
      return fields[col[c]];
    };
    ManifestRecord rec;
    rec.utterance_id = field(0);
    rec.speaker_id = field(1);
    std::string label = ToLower(field(2));
    if (label == "positive")
      rec.label = Label::kPositive;
    else if (label == "negative")
      rec.label = Label::kNegative;
    else
      throw ValidationError("manifest line " + std::to_string(lineno) +
                            ": label must be positive or negative, got '" +
                            field(2) + "'");
    if (rec.utterance_id.empty() || rec.speaker_id.empty())
      throw ValidationError("manifest line " + std::to_string(lineno) +
                            ": empty utterance or speaker id");
    auto resolve = [&](const std::string &p) {
      std::filesystem::path path(p);
      return path.is_absolute() ? path : base_dir / path;
    };
    rec.audio_path = resolve(field(3));
    rec.posteriorgram_path = resolve(field(4));
    manifest.records.push_back(std::move(rec));
  }
  if (!have_header) throw ValidationError("manifest is empty");
  return manifest;
}

DatasetManifest ReadManifest(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open manifest " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  DatasetManifest m = ParseManifest(ss.str(), path.parent_path());
  m.source = path;
  return m;
}

std::vector<std::string> ManifestProblems(const DatasetManifest &manifest,
                                          bool check_files) {
  std::vector<std::string> problems;
  if (manifest.records.empty()) problems.push_back("manifest has no records");
  std::set<std::string> ids, paths;
  std::map<std::string, Label> speaker_label;
  std::set<std::string> conflicted;
  for (const ManifestRecord &r : manifest.records) {
    if (!ids.insert(r.utterance_id).second)
      problems.push_back("duplicate utterance id '" + r.utterance_id + "'");
    for (const auto &p : {r.audio_path, r.posteriorgram_path}) {
      if (!paths.insert(p.lexically_normal().string()).second)
        problems.push_back("path used by more than one record: " + p.string());
      if (check_files && !std::filesystem::is_regular_file(p))
        problems.push_back("missing file for '" + r.utterance_id +
                           "': " + p.string());
    }
    auto [it, inserted] = speaker_label.emplace(r.speaker_id, r.label);
    if (!inserted && it->second != r.label &&
        conflicted.insert(r.speaker_id).second)
      problems.push_back("speaker '" + r.speaker_id +
                         "' has conflicting labels");
  }
  return problems;
}

ManifestSummary Summarize(const DatasetManifest &manifest) {
  ManifestSummary s;
  std::map<std::string, Label> speakers;
  for (const ManifestRecord &r : manifest.records) {
    ++s.utterances;
    ++s.utterances_by_label[r.label];
    ++s.utterances_by_speaker[r.speaker_id];
    speakers.emplace(r.speaker_id, r.label);
  }
  s.speakers = speakers.size();
  for (const auto &[id, label] : speakers) ++s.speakers_by_label[label];
  return s;
}

std::vector<std::string> SharedSpeakers(const DatasetManifest &a,
                                        const DatasetManifest &b) {
  std::set<std::string> sa, sb;
  for (const auto &r : a.records) sa.insert(r.speaker_id);
  for (const auto &r : b.records) sb.insert(r.speaker_id);
  std::vector<std::string> shared;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(shared));
  return shared;
}

}  // namespace phonesv
