// src/posterior/cd_to_ci.cc

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

#include "phonesv/posterior/cd_to_ci.h"

#include <fstream>
#include <sstream>

#include "phonesv/base/error.h"

namespace phonesv {

std::vector<std::string> CiLabels(const PhonemeInventory &inv,
                                  std::string_view silence_label) {
  std::vector<std::string> labels = inv.phones();
  labels.emplace_back(ToLower(silence_label));
  return labels;
}

CdToCiMap ReadCdToCiMap(const std::filesystem::path &path,
                        const PhonemeInventory &inv,
                        std::string_view silence_label) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open CD->CI map " + path.string());
  CdToCiMap map;
  map.ci_labels = CiLabels(inv, silence_label);
  const std::string sil = ToLower(silence_label);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == '#') continue;
    std::string phone, extra;
    long long index = -1;
    try {
      std::size_t used = 0;
      index = std::stoll(first, &used);
      if (used != first.size()) index = -1;
    } catch (const std::exception &) {
      index = -1;
    }
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (index < 0 || !(ss >> phone) || (ss >> extra))
      throw ValidationError(where + ": expected '<cd_index> <ci_phone>'");
    int target;
    if (ToLower(phone) == sil) {
      target = static_cast<int>(inv.size());
    } else if (auto idx = inv.IndexOf(phone)) {
      target = static_cast<int>(*idx);
    } else {
      throw ValidationError(where + ": unknown phone '" + phone + "'");
    }
    auto k = static_cast<std::size_t>(index);
    if (map.target.size() <= k) map.target.resize(k + 1, -1);
    if (map.target[k] >= 0)
      throw ValidationError(where + ": CD index " + first + " mapped twice");
    map.target[k] = target;
  }
  return map;
}

Posteriorgram CollapseToCi(const Matrix &cd_probs, const CdToCiMap &map) {
  const std::size_t k_cols = cd_probs.cols();
  for (std::size_t k = 0; k < k_cols; ++k) {
    if (k >= map.target.size() || map.target[k] < 0)
      throw ValidationError("CD column " + std::to_string(k) +
                            " has no CI mapping");
    if (static_cast<std::size_t>(map.target[k]) >= map.ci_labels.size())
      throw ValidationError("CD column " + std::to_string(k) +
                            " maps outside the CI label set");
  }
  Posteriorgram out;
  out.labels = map.ci_labels;
  out.probs = Matrix(cd_probs.rows(), map.ci_labels.size());
  for (std::size_t j = 0; j < cd_probs.rows(); ++j) {
    auto in = cd_probs.Row(j);
    auto dst = out.probs.Row(j);
    for (std::size_t k = 0; k < k_cols; ++k) dst[map.target[k]] += in[k];
  }
  return out;
}

Posteriorgram ConformToInventory(const Posteriorgram &pg,
                                 const PhonemeInventory &inv,
                                 std::string_view silence_label) {
  const std::vector<std::string> wanted = CiLabels(inv, silence_label);
  if (pg.labels.size() != wanted.size())
    throw ValidationError("posteriorgram has " +
                          std::to_string(pg.labels.size()) +
                          " columns; expected the " +
                          std::to_string(wanted.size()) +
                          " inventory phones plus silence (or supply a CD map)");
  std::vector<std::size_t> source(wanted.size(), wanted.size());
  for (std::size_t i = 0; i < pg.labels.size(); ++i) {
    std::string label = ToLower(pg.labels[i]);
    std::size_t dst = wanted.size();
    for (std::size_t w = 0; w < wanted.size(); ++w)
      if (wanted[w] == label) dst = w;
    if (dst == wanted.size())
      throw ValidationError("posteriorgram label '" + pg.labels[i] +
                            "' is not in the phone inventory");
    if (source[dst] != wanted.size())
      throw ValidationError("posteriorgram label '" + pg.labels[i] +
                            "' appears twice");
    source[dst] = i;
  }
  Posteriorgram out;
  out.labels = wanted;
  out.probs = Matrix(pg.num_frames(), wanted.size());
  for (std::size_t j = 0; j < pg.num_frames(); ++j)
    for (std::size_t w = 0; w < wanted.size(); ++w)
      out.probs(j, w) = pg.probs(j, source[w]);
  return out;
}

Posteriorgram ToInventoryPosteriors(const Posteriorgram &raw,
                                    const PhonemeInventory &inv,
                                    const std::optional<CdToCiMap> &map,
                                    std::string_view silence_label) {
  Posteriorgram ci = map ? CollapseToCi(raw.probs, *map)
                         : ConformToInventory(raw, inv, silence_label);
  return StripSilence(ci, silence_label);
}

}  // namespace phonesv
