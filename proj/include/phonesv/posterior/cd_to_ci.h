// include/phonesv/posterior/cd_to_ci.h

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

#ifndef PHONESV_POSTERIOR_CD_TO_CI_H_
#define PHONESV_POSTERIOR_CD_TO_CI_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonesv/base/matrix.h"
#include "phonesv/posterior/phone_inventory.h"
#include "phonesv/posterior/posteriorgram.h"

namespace phonesv {

// Maps each context-dependent output column of an acoustic model to one
// context-independent phone (or silence). target[k] indexes ci_labels;
// a negative entry marks an unmapped column.
struct CdToCiMap {
  std::vector<std::string> ci_labels;
  std::vector<int> target;
};

// ci_labels = inventory phones followed by the silence label.
std::vector<std::string> CiLabels(const PhonemeInventory &inv,
                                  std::string_view silence_label);

// Text file, one `<cd_index> <ci_phone>` per line ('#' comments allowed).
// Phones must belong to the inventory or be the silence label.
CdToCiMap ReadCdToCiMap(const std::filesystem::path &path,
                        const PhonemeInventory &inv,
                        std::string_view silence_label = kDefaultSilenceLabel);

// Output column c is the sum of all input columns mapped to ci_labels[c].
// Throws ValidationError if any input column is unmapped.
Posteriorgram CollapseToCi(const Matrix &cd_probs, const CdToCiMap &map);

// Reorders a context-independent posteriorgram into inventory order with
// silence last. Labels must be exactly the inventory plus silence.
Posteriorgram ConformToInventory(const Posteriorgram &pg,
                                 const PhonemeInventory &inv,
                                 std::string_view silence_label);

// Raw model output -> 39 silence-free columns in inventory order. With a
// map the columns are collapsed, otherwise they must already be CI phones.
Posteriorgram ToInventoryPosteriors(const Posteriorgram &raw,
                                    const PhonemeInventory &inv,
                                    const std::optional<CdToCiMap> &map,
                                    std::string_view silence_label);

}  // namespace phonesv

#endif  // PHONESV_POSTERIOR_CD_TO_CI_H_
