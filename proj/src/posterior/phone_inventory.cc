// src/posterior/phone_inventory.cc

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

#include "phonesv/posterior/phone_inventory.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

constexpr std::array<std::pair<PhoneClass, std::string_view>, kNumPhoneClasses>
    kClassNames = {{
        {PhoneClass::kNasals, "nasals"},
        {PhoneClass::kBackVowels, "back-vowels"},
        {PhoneClass::kFrontVowels, "front-vowels"},
        {PhoneClass::kMidVowels, "mid-vowels"},
        {PhoneClass::kSemiVowels, "semi-vowels"},
        {PhoneClass::kStops, "stops"},
        {PhoneClass::kFricatives, "fricatives"},
        {PhoneClass::kDiphthongs, "diphthongs"},
    }};

}  // namespace

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const std::array<PhoneClass, kNumPhoneClasses> &AllPhoneClasses() {
  static const std::array<PhoneClass, kNumPhoneClasses> all = [] {
    std::array<PhoneClass, kNumPhoneClasses> a{};
    for (std::size_t i = 0; i < kNumPhoneClasses; ++i) a[i] = kClassNames[i].first;
    return a;
  }();
  return all;
}

std::string_view PhoneClassName(PhoneClass c) {
  for (const auto &[cls, name] : kClassNames)
    if (cls == c) return name;
  return "unknown";
}

std::optional<PhoneClass> ParsePhoneClass(std::string_view name) {
  std::string lower = ToLower(name);
  for (const auto &[cls, n] : kClassNames)
    if (n == lower) return cls;
  return std::nullopt;
}

PhonemeInventory PhonemeInventory::Default() {
  using enum PhoneClass;
  return FromEntries({
      {"iy", kFrontVowels}, {"ih", kFrontVowels}, {"eh", kFrontVowels},
      {"ae", kFrontVowels},
      {"er", kMidVowels},   {"ah", kMidVowels},
      {"uw", kBackVowels},  {"uh", kBackVowels},  {"ao", kBackVowels},
      {"aa", kBackVowels},
      {"ey", kDiphthongs},  {"ay", kDiphthongs},  {"oy", kDiphthongs},
      {"aw", kDiphthongs},  {"ow", kDiphthongs},
      {"l", kSemiVowels},   {"r", kSemiVowels},   {"w", kSemiVowels},
      {"y", kSemiVowels},
      {"m", kNasals},       {"n", kNasals},       {"ng", kNasals},
      {"b", kStops},        {"d", kStops},        {"g", kStops},
      {"p", kStops},        {"t", kStops},        {"k", kStops},
      {"jh", kFricatives},  {"ch", kFricatives},  {"s", kFricatives},
      {"sh", kFricatives},  {"z", kFricatives},   {"zh", kFricatives},
      {"f", kFricatives},   {"th", kFricatives},  {"v", kFricatives},
      {"dh", kFricatives},  {"hh", kFricatives},
  });
}

PhonemeInventory PhonemeInventory::FromEntries(
    std::vector<std::pair<std::string, PhoneClass>> entries) {
  if (entries.size() != kNumPhones)
    throw ValidationError("phone inventory must list exactly 39 phones, got " +
                          std::to_string(entries.size()));
  PhonemeInventory inv;
  std::set<std::string> seen;
  for (auto &[phone, cls] : entries) {
    std::string name = ToLower(phone);
    if (name.empty()) throw ValidationError("empty phone name in inventory");
    if (name == "sil" || name == "<sil>")
      throw ValidationError("silence must not be part of the phone inventory");
    if (!seen.insert(name).second)
      throw ValidationError("duplicate phone '" + name + "' in inventory");
    inv.phones_.push_back(std::move(name));
    inv.classes_.push_back(cls);
  }
  return inv;
}

PhonemeInventory PhonemeInventory::FromFile(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open inventory file " + path.string());
  std::vector<std::pair<std::string, PhoneClass>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string phone, cls, extra;
    if (!(ss >> phone) || phone[0] == '#') continue;
    if (!(ss >> cls) || (ss >> extra))
      throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                            ": expected '<phone> <class>'");
    auto parsed = ParsePhoneClass(cls);
    if (!parsed)
      throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                            ": unknown phone class '" + cls + "'");
    entries.emplace_back(phone, *parsed);
  }
  return FromEntries(std::move(entries));
}

std::optional<std::size_t> PhonemeInventory::IndexOf(
    std::string_view phone) const {
  std::string name = ToLower(phone);
  auto it = std::find(phones_.begin(), phones_.end(), name);
  if (it == phones_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - phones_.begin());
}

std::vector<std::size_t> PhonemeInventory::ClassIndices(PhoneClass c) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i] == c) out.push_back(i);
  return out;
}

std::string PhonemeInventory::ToText() const {
  std::string out;
  for (std::size_t i = 0; i < phones_.size(); ++i) {
    out += phones_[i];
    out += ' ';
    out += PhoneClassName(classes_[i]);
    out += '\n';
  }
  return out;
}

std::vector<std::size_t> ClassIndices(const PhonemeInventory &inv,
                                      std::string_view class_name) {
  auto cls = ParsePhoneClass(class_name);
  if (!cls)
    throw ValidationError("unknown phone class '" + std::string(class_name) +
                          "'");
  return inv.ClassIndices(*cls);
}

}  // namespace phonesv
