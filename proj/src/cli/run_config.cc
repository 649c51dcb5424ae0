// src/cli/run_config.cc

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

#include "phonesv/cli/run_config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

std::string Trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double ParseDouble(std::string_view key, std::string_view text) {
  double v = 0.0;
  std::string t = Trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
    throw ValidationError("config '" + std::string(key) +
                          "': not a number: '" + t + "'");
  return v;
}

long long ParseInt(std::string_view key, std::string_view text) {
  long long v = 0;
  std::string t = Trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ValidationError("config '" + std::string(key) +
                          "': not an integer: '" + t + "'");
  return v;
}

bool ParseBool(std::string_view key, std::string_view text) {
  std::string t = ToLower(Trim(text));
  if (t == "true" || t == "1" || t == "on" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "off" || t == "no") return false;
  throw ValidationError("config '" + std::string(key) +
                        "': expected true/false, got '" + t + "'");
}

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> items;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      items.push_back(Trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  items.push_back(Trim(cur));
  return items;
}

std::string FormatDouble(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

}  // namespace

void RunConfig::Set(std::string_view key_in, std::string_view value_in,
                    const std::filesystem::path &base_dir) {
  const std::string key = ToLower(Trim(key_in));
  const std::string value = Trim(value_in);
  auto resolve = [&](const std::string &p) {
    std::filesystem::path path(p);
    return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
  };
  if (key == "phone_class") {
    std::string v = ToLower(value);
    if (v != "full" && !ParsePhoneClass(v))
      throw ValidationError("unknown phone class '" + value + "'");
    phone_class = v;
  } else if (key == "threshold") {
    threshold = ParseDouble(key, value);
  } else if (key == "gate_mode") {
    std::string v = ToLower(value);
    if (v == "both") gate_mode = GateMode::kBoth;
    else if (v == "test") gate_mode = GateMode::kTestOnly;
    else throw ValidationError("gate_mode must be 'both' or 'test'");
  } else if (key == "window_seconds") {
    window_seconds = ParseDouble(key, value);
  } else if (key == "shift_seconds") {
    shift_seconds = ParseDouble(key, value);
  } else if (key == "c_grid") {
    c_grid.clear();
    for (const auto &item : SplitList(value)) c_grid.push_back(ParseDouble(key, item));
  } else if (key == "gamma_grid") {
    gamma_grid.clear();
    for (const auto &item : SplitList(value)) gamma_grid.push_back(GammaSpec::Parse(item));
  } else if (key == "c") {
    c = ParseDouble(key, value);
  } else if (key == "gamma") {
    gamma = GammaSpec::Parse(value);
  } else if (key == "class_weighting") {
    class_weighting = ParseBool(key, value);
  } else if (key == "folds") {
    folds = static_cast<int>(ParseInt(key, value));
  } else if (key == "seed") {
    long long s = ParseInt(key, value);
    if (s < 0) throw ValidationError("seed must be non-negative");
    seed = static_cast<std::uint64_t>(s);
  } else if (key == "out") {
    out_dir = value;
  } else if (key == "workers") {
    workers = static_cast<int>(ParseInt(key, value));
  } else if (key == "inventory") {
    if (value == "default") inventory_path.reset();
    else inventory_path = resolve(value);
  } else if (key == "cd_map") {
    if (value == "none") cd_map_path.reset();
    else cd_map_path = resolve(value);
  } else if (key == "silence_label") {
    silence_label = value;
  } else if (key == "svm_tolerance") {
    svm_tolerance = ParseDouble(key, value);
  } else if (key == "svm_max_iterations") {
    svm_max_iterations = ParseInt(key, value);
  } else if (key == "svm_cache_mb") {
    svm_cache_mb = static_cast<std::size_t>(ParseInt(key, value));
  } else {
    throw ValidationError("unknown config key '" + key + "'");
  }
}

RunConfig RunConfig::FromFile(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open config " + path.string());
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (Trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                            ": expected 'key = value'");
    cfg.Set(line.substr(0, eq), line.substr(eq + 1), path.parent_path());
  }
  return cfg;
}

void RunConfig::Validate() const {
  if (!(threshold >= 0.0)) throw ValidationError("threshold must be >= 0");
  if (folds < 2) throw ValidationError("folds must be >= 2");
  if (workers < 1) throw ValidationError("workers must be >= 1");
  if (c_grid.empty() || gamma_grid.empty())
    throw ValidationError("C and gamma grids must be non-empty");
  for (double v : c_grid)
    if (!(v > 0.0)) throw ValidationError("C grid values must be positive");
  if (c && !(*c > 0.0)) throw ValidationError("c must be positive");
  if (c.has_value() != gamma.has_value())
    throw ValidationError("set both c and gamma, or neither");
  if (!(svm_tolerance > 0.0) || svm_max_iterations <= 0 || svm_cache_mb == 0)
    throw ValidationError("invalid SVM solver settings");
  segment_spec();
}

SegmentSpec RunConfig::segment_spec() const {
  return SegmentSpec::FromSeconds(window_seconds, shift_seconds);
}

SmoOptions RunConfig::smo_options() const {
  SmoOptions o;
  o.tolerance = svm_tolerance;
  o.max_iterations = svm_max_iterations;
  o.cache_bytes = svm_cache_mb << 20;
  return o;
}

std::string RunConfig::ToText() const {
  auto join_c = [&] {
    std::string s;
    for (double v : c_grid) s += (s.empty() ? "" : ",") + FormatDouble(v);
    return s;
  };
  auto join_gamma = [&] {
    std::string s;
    for (const auto &g : gamma_grid) s += (s.empty() ? "" : ",") + g.ToString();
    return s;
  };
  std::ostringstream ss;
  ss << "phone_class = " << phone_class << '\n'
     << "threshold = " << FormatDouble(threshold) << '\n'
     << "gate_mode = " << (gate_mode == GateMode::kBoth ? "both" : "test") << '\n'
     << "window_seconds = " << FormatDouble(window_seconds) << '\n'
     << "shift_seconds = " << FormatDouble(shift_seconds) << '\n'
     << "c_grid = " << join_c() << '\n'
     << "gamma_grid = " << join_gamma() << '\n';
  if (c) ss << "c = " << FormatDouble(*c) << '\n';
  if (gamma) ss << "gamma = " << gamma->ToString() << '\n';
  ss << "class_weighting = " << (class_weighting ? "true" : "false") << '\n'
     << "folds = " << folds << '\n'
     << "seed = " << seed << '\n'
     << "out = " << out_dir.string() << '\n'
     << "workers = " << workers << '\n'
     << "inventory = " << (inventory_path ? inventory_path->string() : "default") << '\n'
     << "cd_map = " << (cd_map_path ? cd_map_path->string() : "none") << '\n'
     << "silence_label = " << silence_label << '\n'
     << "svm_tolerance = " << FormatDouble(svm_tolerance) << '\n'
     << "svm_max_iterations = " << svm_max_iterations << '\n'
     << "svm_cache_mb = " << svm_cache_mb << '\n';
  return ss.str();
}

}  // namespace phonesv
