// include/phonesv/posterior/phone_inventory.h

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

#ifndef PHONESV_POSTERIOR_PHONE_INVENTORY_H_
#define PHONESV_POSTERIOR_PHONE_INVENTORY_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phonesv {

enum class PhoneClass {
  kNasals,
  kBackVowels,
  kFrontVowels,
  kMidVowels,
  kSemiVowels,
  kStops,
  kFricatives,
  kDiphthongs,
};

inline constexpr std::size_t kNumPhoneClasses = 8;
inline constexpr std::size_t kNumPhones = 39;

const std::array<PhoneClass, kNumPhoneClasses> &AllPhoneClasses();
// "nasals", "back-vowels", ...
std::string_view PhoneClassName(PhoneClass c);
std::optional<PhoneClass> ParsePhoneClass(std::string_view name);

// Ordered set of 39 context-independent phones (silence excluded), each
// assigned to exactly one articulatory class.
class PhonemeInventory {
 public:
  // The folded 39-phone ARPAbet set with the default class partition.
  static PhonemeInventory Default();

  // Plain text, one `<phone> <class>` per line; blank lines and lines
  // starting with '#' are skipped. Phone names are lower-cased.
  static PhonemeInventory FromFile(const std::filesystem::path &path);

  // Validates: exactly 39 phones, unique names, none named like silence.
  static PhonemeInventory FromEntries(
      std::vector<std::pair<std::string, PhoneClass>> entries);

  std::size_t size() const { return phones_.size(); }
  const std::vector<std::string> &phones() const { return phones_; }
  PhoneClass ClassOf(std::size_t index) const { return classes_.at(index); }
  std::optional<std::size_t> IndexOf(std::string_view phone) const;

  // Indices of the class's phones, ascending.
  std::vector<std::size_t> ClassIndices(PhoneClass c) const;

  // Serializes in the FromFile format.
  std::string ToText() const;

 private:
  std::vector<std::string> phones_;
  std::vector<PhoneClass> classes_;
};

// Throws ValidationError on an unknown class name.
std::vector<std::size_t> ClassIndices(const PhonemeInventory &inv,
                                      std::string_view class_name);

std::string ToLower(std::string_view s);

}  // namespace phonesv

#endif  // PHONESV_POSTERIOR_PHONE_INVENTORY_H_
