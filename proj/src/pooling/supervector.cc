// src/pooling/supervector.cc

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

#include "phonesv/pooling/supervector.h"

#include <cmath>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

void CheckPair(const FeatureMatrix &feats, const Posteriorgram &pg) {
  if (feats.rows() != pg.num_frames())
    throw ValidationError("feature/posterior frame mismatch: " +
                          std::to_string(feats.rows()) + " vs " +
                          std::to_string(pg.num_frames()));
  if (feats.rows() == 0) throw ValidationError("no frames to pool");
  if (!feats.AllFinite()) throw ValidationError("non-finite feature values");
  if (!pg.probs.AllFinite()) throw ValidationError("non-finite posteriors");
}

void CheckPhone(const Posteriorgram &pg, std::size_t phone) {
  if (phone >= pg.num_phones())
    throw ValidationError("phone index " + std::to_string(phone) +
                          " out of range (M=" +
                          std::to_string(pg.num_phones()) + ")");
}

// Assumes CheckPair has passed.
void AccumulateStats(const FeatureMatrix &feats, const Posteriorgram &pg,
                     std::size_t phone, std::span<double> out) {
  const std::size_t dim = feats.cols();
  double mass = 0.0;
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t j = 0; j < feats.rows(); ++j) {
    const double p = pg.probs(j, phone);
    mass += p;
    auto x = feats.Row(j);
    for (std::size_t d = 0; d < dim; ++d) out[d] += p * x[d];
  }
  if (mass == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  for (double &v : out) v /= mass;
}

}  // namespace

std::vector<double> FirstOrderStats(const FeatureMatrix &feats,
                                    const Posteriorgram &pg,
                                    std::size_t phone) {
  CheckPair(feats, pg);
  CheckPhone(pg, phone);
  std::vector<double> out(feats.cols());
  AccumulateStats(feats, pg, phone, out);
  return out;
}

std::vector<double> BuildSupervector(const FeatureMatrix &feats,
                                     const Posteriorgram &pg,
                                     std::span<const std::size_t> subset) {
  if (subset.empty()) throw ValidationError("empty phone subset");
  CheckPair(feats, pg);
  for (std::size_t phone : subset) CheckPhone(pg, phone);
  const std::size_t dim = feats.cols();
  std::vector<double> out(dim * subset.size());
  for (std::size_t s = 0; s < subset.size(); ++s)
    AccumulateStats(feats, pg, subset[s],
                    std::span<double>(out).subspan(s * dim, dim));
  return out;
}

double PosteriorMass(const Posteriorgram &pg,
                     std::span<const std::size_t> subset) {
  for (std::size_t phone : subset) CheckPhone(pg, phone);
  double mass = 0.0;
  for (std::size_t j = 0; j < pg.num_frames(); ++j) {
    auto row = pg.probs.Row(j);
    for (std::size_t phone : subset) mass += row[phone];
  }
  return mass;
}

}  // namespace phonesv
