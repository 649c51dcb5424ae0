// tests/pooling_test.cc

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

#include <gtest/gtest.h>

#include <random>

#include "phonesv/base/error.h"
#include "phonesv/pooling/segment.h"
#include "phonesv/pooling/supervector.h"
#include "phonesv/pooling/supervector_io.h"
#include "phonesv/posterior/phone_inventory.h"
#include "test_util.h"

namespace phonesv {
namespace {

struct RandomPair {
  FeatureMatrix x;
  Posteriorgram pg;
};

RandomPair MakeRandom(std::mt19937_64 &rng, std::size_t t, std::size_t d,
                      std::size_t m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g(0.0, 3.0);
  RandomPair r{FeatureMatrix(t, d), {}};
  r.pg.probs = Matrix(t, m);
  for (std::size_t i = 0; i < m; ++i) r.pg.labels.push_back("p" + std::to_string(i));
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = 0; k < d; ++k) r.x(j, k) = g(rng);
    double sum = 0;
    for (std::size_t i = 0; i < m; ++i) sum += (r.pg.probs(j, i) = u(rng));
    for (std::size_t i = 0; i < m; ++i) r.pg.probs(j, i) /= sum;
  }
  return r;
}

// f_i = sum_j p_j x_j / sum_j p_j
std::vector<double> NaiveStats(const FeatureMatrix &x, const Posteriorgram &pg,
                               std::size_t phone) {
  std::vector<double> num(x.cols(), 0.0);
  double den = 0.0;
  for (std::size_t j = 0; j < x.rows(); ++j) {
    den += pg.probs(j, phone);
    for (std::size_t d = 0; d < x.cols(); ++d)
      num[d] += pg.probs(j, phone) * x(j, d);
  }
  if (den == 0.0) return std::vector<double>(x.cols(), 0.0);
  for (double &v : num) v /= den;
  return num;
}

TEST(FirstOrderStats, SingleFrame) {
  FeatureMatrix x(1, 3);
  x(0, 0) = 1.5;
  x(0, 1) = -2;
  x(0, 2) = 7;
  Posteriorgram pg{Matrix(1, 1), {"a"}};
  pg.probs(0, 0) = 1.0;
  EXPECT_EQ(FirstOrderStats(x, pg, 0), (std::vector<double>{1.5, -2, 7}));
}

TEST(FirstOrderStats, UniformWeightsGivePlainMean) {
  std::mt19937_64 rng(1);
  RandomPair r = MakeRandom(rng, 7, 4, 2);
  for (std::size_t j = 0; j < 7; ++j) r.pg.probs(j, 0) = r.pg.probs(j, 1) = 0.5;
  std::vector<double> f = FirstOrderStats(r.x, r.pg, 0);
  for (std::size_t d = 0; d < 4; ++d) {
    double mean = 0;
    for (std::size_t j = 0; j < 7; ++j) mean += r.x(j, d) / 7;
    EXPECT_NEAR(f[d], mean, 1e-12);
  }
}

TEST(FirstOrderStats, HandComputedToy) {
  FeatureMatrix x(3, 2);
  x(0, 0) = 1; x(0, 1) = 0;
  x(1, 0) = 0; x(1, 1) = 1;
  x(2, 0) = 2; x(2, 1) = 2;
  Posteriorgram pg{Matrix(3, 1), {"a"}};
  pg.probs(0, 0) = 0.5;
  pg.probs(1, 0) = 0.3;
  pg.probs(2, 0) = 0.2;
  std::vector<double> f = FirstOrderStats(x, pg, 0);
  EXPECT_NEAR(f[0], 0.9, 1e-15);
  EXPECT_NEAR(f[1], 0.7, 1e-15);
}

TEST(FirstOrderStats, ZeroMassGivesZeroVector) {
  FeatureMatrix x(4, 3);
  x(1, 1) = 5;
  Posteriorgram pg{Matrix(4, 2), {"a", "b"}};
  for (std::size_t j = 0; j < 4; ++j) pg.probs(j, 1) = 1.0;
  EXPECT_EQ(FirstOrderStats(x, pg, 0), std::vector<double>(3, 0.0));
}

TEST(FirstOrderStats, MatchesNaiveOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t t = 1 + rng() % 50, d = 1 + rng() % 8, m = 1 + rng() % 5;
    RandomPair r = MakeRandom(rng, t, d, m);
    for (std::size_t i = 0; i < m; ++i) {
      auto got = FirstOrderStats(r.x, r.pg, i);
      auto want = NaiveStats(r.x, r.pg, i);
      for (std::size_t k = 0; k < d; ++k)
        ASSERT_LE(testing::RelDiff(got[k], want[k]), 1e-12);
    }
  }
}

TEST(FirstOrderStats, ScaleInvariantAndConvex) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RandomPair r = MakeRandom(rng, 20, 5, 3);
    auto f = FirstOrderStats(r.x, r.pg, 1);
    Posteriorgram scaled = r.pg;
    const double c = 0.001 + (rng() % 1000) / 10.0;
    for (std::size_t j = 0; j < 20; ++j) scaled.probs(j, 1) *= c;
    auto g = FirstOrderStats(r.x, scaled, 1);
    for (std::size_t d = 0; d < 5; ++d) {
      EXPECT_LE(testing::RelDiff(f[d], g[d]), 1e-12);
      double lo = r.x(0, d), hi = r.x(0, d);
      for (std::size_t j = 0; j < 20; ++j) {
        lo = std::min(lo, r.x(j, d));
        hi = std::max(hi, r.x(j, d));
      }
      EXPECT_GE(f[d], lo - 1e-12);
      EXPECT_LE(f[d], hi + 1e-12);
    }
  }
}

TEST(FirstOrderStats, BadInputsRejected) {
  FeatureMatrix x(3, 2);
  Posteriorgram pg{Matrix(2, 1), {"a"}};
  EXPECT_THROW(FirstOrderStats(x, pg, 0), ValidationError);
  Posteriorgram ok{Matrix(3, 1), {"a"}};
  EXPECT_THROW(FirstOrderStats(x, ok, 1), ValidationError);
}

TEST(BuildSupervector, Dimensions) {
  std::mt19937_64 rng(3);
  RandomPair r = MakeRandom(rng, 30, 40, 39);
  PhonemeInventory inv = PhonemeInventory::Default();
  std::vector<std::size_t> all(39);
  for (std::size_t i = 0; i < 39; ++i) all[i] = i;
  EXPECT_EQ(BuildSupervector(r.x, r.pg, all).size(), 1560u);
  EXPECT_EQ(BuildSupervector(r.x, r.pg, ClassIndices(inv, "nasals")).size(),
            120u);
  std::vector<std::size_t> none;
  EXPECT_THROW(BuildSupervector(r.x, r.pg, none), ValidationError);
}

TEST(BuildSupervector, BlocksEqualPerPhoneStats) {
  std::mt19937_64 rng(8);
  RandomPair r = MakeRandom(rng, 25, 6, 5);
  std::vector<std::size_t> subset{4, 1, 3};
  auto sv = BuildSupervector(r.x, r.pg, subset);
  for (std::size_t b = 0; b < subset.size(); ++b) {
    auto f = FirstOrderStats(r.x, r.pg, subset[b]);
    for (std::size_t d = 0; d < 6; ++d) EXPECT_EQ(sv[b * 6 + d], f[d]);
  }
  std::vector<std::size_t> one{2};
  EXPECT_EQ(BuildSupervector(r.x, r.pg, one), FirstOrderStats(r.x, r.pg, 2));
}

TEST(PosteriorMass, Examples) {
  Posteriorgram pg{Matrix(3, 2), {"a", "b"}};
  pg.probs(0, 0) = .1; pg.probs(0, 1) = .2;
  pg.probs(1, 0) = .3; pg.probs(1, 1) = .4;
  pg.probs(2, 0) = .5; pg.probs(2, 1) = .6;
  std::vector<std::size_t> both{0, 1}, a{0}, b{1};
  EXPECT_NEAR(PosteriorMass(pg, both), 2.1, 1e-15);
  EXPECT_NEAR(PosteriorMass(pg, a) + PosteriorMass(pg, b),
              PosteriorMass(pg, both), 1e-15);

  Posteriorgram nasal{Matrix(30, 1), {"m"}};
  for (std::size_t j = 0; j < 30; ++j) nasal.probs(j, 0) = 1.0;
  std::vector<std::size_t> m{0};
  EXPECT_EQ(PosteriorMass(nasal, m), 30.0);
  EXPECT_TRUE(PassesGate(PosteriorMass(nasal, m), kDefaultGateThreshold));
  Posteriorgram zero{Matrix(30, 1), {"m"}};
  EXPECT_EQ(PosteriorMass(zero, m), 0.0);
  EXPECT_FALSE(PassesGate(0.0, kDefaultGateThreshold));
}

TEST(Gate, InclusiveBoundary) {
  EXPECT_TRUE(PassesGate(30.0, 30.0));
  EXPECT_FALSE(PassesGate(29.999, 30.0));
  EXPECT_TRUE(PassesGate(0.0, 0.0));
}

std::size_t NaiveSegmentCount(std::size_t t, std::size_t w, std::size_t s) {
  if (t == 0) return 0;
  if (t < w) return 1;
  std::size_t n = 0;
  for (std::size_t start = 0; start + w <= t; start += s) ++n;
  return n;
}

TEST(Segments, Counts) {
  SegmentSpec spec;
  EXPECT_EQ(SegmentRanges(300, spec).size(), 1u);
  EXPECT_EQ(SegmentRanges(500, spec).size(), 21u);
  auto short_one = SegmentRanges(150, spec);
  ASSERT_EQ(short_one.size(), 1u);
  EXPECT_EQ(short_one[0].begin, 0u);
  EXPECT_EQ(short_one[0].count, 150u);
  EXPECT_TRUE(SegmentRanges(0, spec).empty());
  for (std::size_t t = 1; t < 2000; t += 7) {
    auto ranges = SegmentRanges(t, spec);
    ASSERT_EQ(ranges.size(), NaiveSegmentCount(t, 300, 10)) << t;
    for (std::size_t k = 0; k < ranges.size(); ++k) {
      EXPECT_EQ(ranges[k].begin, 10 * k);
      EXPECT_LE(ranges[k].begin + ranges[k].count, t);
    }
  }
}

TEST(Segments, FromSeconds) {
  SegmentSpec s = SegmentSpec::FromSeconds(3.0, 0.1);
  EXPECT_EQ(s.window_frames, 300u);
  EXPECT_EQ(s.shift_frames, 10u);
  EXPECT_THROW(SegmentSpec::FromSeconds(0.1, 0.3), ValidationError);
  EXPECT_THROW(SegmentSpec::FromSeconds(3.0, 0.0), ValidationError);
}

TEST(Segments, SliceRows) {
  std::mt19937_64 rng(1);
  RandomPair r = MakeRandom(rng, 320, 2, 3);
  auto segs = SegmentUtterance(r.x, r.pg, SegmentSpec{});
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[2].feats.rows(), 300u);
  EXPECT_EQ(segs[2].feats(0, 1), r.x(20, 1));
  EXPECT_EQ(segs[2].posteriors.probs(299, 2), r.pg.probs(319, 2));
  EXPECT_EQ(segs[2].posteriors.labels, r.pg.labels);
}

TEST(SuperVectorIo, RoundTrip) {
  testing::TempDir dir("svv");
  std::vector<SuperVector> recs = {
      {"u1", "s1", Label::kPositive, {1.5, -2.25, 0.0}},
      {"u2#3", "s2", Label::kNegative, {0.125, 7, 8}},
  };
  WriteSuperVectors(dir / "x.svv", 3, recs);
  std::size_t dim = 0;
  auto back = ReadSuperVectors(dir / "x.svv", &dim);
  EXPECT_EQ(dim, 3u);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].utterance_id, recs[i].utterance_id);
    EXPECT_EQ(back[i].speaker_id, recs[i].speaker_id);
    EXPECT_EQ(back[i].label, recs[i].label);
    EXPECT_EQ(back[i].values, recs[i].values);
  }
  std::vector<SuperVector> bad = {{"u", "s", Label::kPositive, {1.0}}};
  EXPECT_THROW(WriteSuperVectors(dir / "y.svv", 3, bad), ValidationError);
}

}  // namespace
}  // namespace phonesv
