// tests/svm_test.cc

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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "phonesv/base/error.h"
#include "phonesv/svm/grid_search.h"
#include "phonesv/svm/kernel.h"
#include "phonesv/svm/scaler.h"
#include "phonesv/svm/smo.h"
#include "phonesv/svm/svm_model.h"
#include "qp_oracle.h"
#include "test_util.h"

namespace phonesv {
namespace {

using Points = std::vector<std::vector<double>>;

struct Dataset {
  Points x;
  std::vector<int> y;
};

Dataset RandomDataset(std::mt19937_64 &rng, std::size_t n, std::size_t d) {
  std::normal_distribution<double> g;
  Dataset ds;
  for (std::size_t i = 0; i < n; ++i) {
    int label = i % 2 == 0 ? 1 : -1;
    std::vector<double> p(d);
    for (auto &v : p) v = g(rng) + 0.8 * label;
    ds.x.push_back(p);
    ds.y.push_back(label);
  }
  return ds;
}

Matrix Gram(const Points &x, double gamma) {
  Matrix k(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) k(i, j) = RbfKernel(x[i], x[j], gamma);
  return k;
}

// Largest violation of the KKT conditions for the given bias.
double KktViolation(const Matrix &k, const std::vector<int> &y,
                    const std::vector<double> &alpha, double bias,
                    double c_pos, double c_neg) {
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double f = bias;
    for (std::size_t j = 0; j < y.size(); ++j) f += alpha[j] * y[j] * k(i, j);
    double margin = y[i] * f;
    double c = y[i] > 0 ? c_pos : c_neg;
    const double eps = 1e-9 * c;
    if (alpha[i] <= eps)
      worst = std::max(worst, 1.0 - margin);
    else if (alpha[i] >= c - eps)
      worst = std::max(worst, margin - 1.0);
    else
      worst = std::max(worst, std::abs(margin - 1.0));
  }
  return worst;
}

TEST(Scaler, HandArithmetic) {
  Scaler s = Scaler::Fit({{0.0}, {2.0}});
  EXPECT_EQ(s.mean, std::vector<double>{1.0});
  EXPECT_EQ(s.stddev, std::vector<double>{1.0});
  EXPECT_EQ(s.Transform(std::vector<double>{3.0}), std::vector<double>{2.0});
}

TEST(Scaler, ConstantDimensionAndMean) {
  Scaler s = Scaler::Fit({{5.0, 1.0}, {5.0, 2.0}, {5.0, 6.0}});
  EXPECT_EQ(s.stddev[0], kStdFloor);
  auto t = s.Transform(std::vector<double>{5.0, 3.0});
  EXPECT_EQ(t[0], 0.0);
  auto m = s.Transform(s.mean);
  for (double v : m) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(Scaler::Fit({{1.0}}), ValidationError);
  EXPECT_THROW(Scaler::Fit({{1.0}, {1.0, 2.0}}), ValidationError);
  EXPECT_THROW(Scaler::Fit({{1.0}, {INFINITY}}), ValidationError);
  EXPECT_THROW(s.Transform(std::vector<double>{1.0}), ValidationError);
}

TEST(RbfKernel, Values) {
  std::vector<double> a{0, 0}, b{1, 1};
  EXPECT_EQ(RbfKernel(a, a, 0.5), 1.0);
  EXPECT_NEAR(RbfKernel(a, b, 0.5), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(RbfKernel(a, b, 0.5), 0.367879, 1e-6);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int i = 0; i < 100; ++i) {
    std::vector<double> p(5), q(5);
    for (auto &v : p) v = g(rng);
    for (auto &v : q) v = g(rng);
    EXPECT_EQ(RbfKernel(p, q, 0.3), RbfKernel(q, p, 0.3));
  }
  std::vector<double> c{1, 2, 3};
  EXPECT_THROW(RbfKernel(a, c, 1.0), ValidationError);
  EXPECT_THROW(RbfKernel(a, b, 0.0), ValidationError);
}

TEST(KernelMatrix, ImplementationsAgree) {
  std::mt19937_64 rng(6);
  Dataset ds = RandomDataset(rng, 12, 3);
  Matrix k = Gram(ds.x, 0.7);
  DenseKernelMatrix dense(k);
  RbfKernelMatrix lazy(ds.x, 0.7);
  Matrix d2 = PairwiseSquaredDistances(ds.x);
  RbfFromDistances cached(d2, 0.7);
  std::vector<double> r1(12), r2(12), r3(12);
  for (std::size_t i = 0; i < 12; ++i) {
    dense.Row(i, r1);
    lazy.Row(i, r2);
    cached.Row(i, r3);
    for (std::size_t j = 0; j < 12; ++j) {
      EXPECT_NEAR(r1[j], r2[j], 1e-14);
      EXPECT_NEAR(r1[j], r3[j], 1e-12);
    }
    EXPECT_EQ(lazy.Diagonal(i), 1.0);
  }
}

TEST(Smo, MatchesDenseQpAndSatisfiesKkt) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Dataset ds = RandomDataset(rng, 10, 2);
    Matrix k = Gram(ds.x, 0.5);
    const double c_pos = trial % 3 == 0 ? 0.5 : 4.0;
    const double c_neg = trial % 2 == 0 ? c_pos : 2.0 * c_pos;
    DualSolution sol = SolveDual(DenseKernelMatrix(k), ds.y, c_pos, c_neg);
    std::vector<double> upper;
    for (int y : ds.y) upper.push_back(y > 0 ? c_pos : c_neg);
    testing::QpResult ref = testing::SolveSvmDualDense(k, ds.y, upper);
    ASSERT_TRUE(ref.converged);
    EXPECT_LE(testing::RelDiff(sol.objective, ref.objective), 1e-4);
    EXPECT_NEAR(sol.objective, DualObjective(DenseKernelMatrix(k), ds.y, sol.alpha),
                1e-9 * std::max(1.0, std::abs(sol.objective)));
    EXPECT_LE(KktViolation(k, ds.y, sol.alpha, sol.bias, c_pos, c_neg), 1e-3);
    double eq = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
      EXPECT_GE(sol.alpha[i], 0.0);
      EXPECT_LE(sol.alpha[i], upper[i]);
      eq += sol.alpha[i] * ds.y[i];
    }
    EXPECT_LT(std::abs(eq), 1e-6);
  }
}

TEST(Smo, BeatsRandomFeasiblePoints) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Dataset ds = RandomDataset(rng, 16, 3);
  Matrix k = Gram(ds.x, 0.2);
  DenseKernelMatrix km(k);
  const double c = 3.0;
  DualSolution sol = SolveDual(km, ds.y, c, c);
  for (int trial = 0; trial < 500; ++trial) {
    // equal numbers of each class: pair the i-th positive with the i-th negative
    std::vector<double> alpha(16, 0.0);
    for (std::size_t i = 0; i < 16; i += 2) alpha[i] = alpha[i + 1] = c * u(rng);
    EXPECT_GE(sol.objective, DualObjective(km, ds.y, alpha) - 1e-12);
  }
}

TEST(Smo, IterationCapIsReported) {
  std::mt19937_64 rng(3);
  Dataset ds = RandomDataset(rng, 40, 2);
  SmoOptions opts;
  opts.max_iterations = 2;
  EXPECT_THROW(SolveDual(RbfKernelMatrix(ds.x, 1.0), ds.y, 10.0, 10.0, opts),
               ProcessingError);
}

TEST(SvmTrain, TwoSymmetricPoints) {
  Hyperparams hp{1000.0, 0.5, true};
  SvmModel m = TrainSvm({{-1.0}, {1.0}}, {-1, 1}, hp);
  EXPECT_NEAR(m.DecisionValue(std::vector<double>{0.0}), 0.0, 1e-9);
  EXPECT_GT(m.DecisionValue(std::vector<double>{1.0}), 0.0);
  EXPECT_LT(m.DecisionValue(std::vector<double>{-1.0}), 0.0);
  EXPECT_GT(m.DecisionValue(std::vector<double>{0.01}), 0.0);
  EXPECT_LT(m.DecisionValue(std::vector<double>{-0.01}), 0.0);
  EXPECT_EQ(m.Predict(std::vector<double>{0.7}), 1);
}

TEST(SvmTrain, XorAgainstDenseQp) {
  Points x = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  std::vector<int> y = {-1, -1, 1, 1};
  Hyperparams hp{10.0, 1.0, false};
  SvmModel coarse = TrainSvm(x, y, hp);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(coarse.Predict(x[i]), y[i]);
  // the default stopping rule allows 1e-3 of slack; tighten it to compare
  SmoOptions tight;
  tight.tolerance = 1e-8;
  SvmModel m = TrainSvm(x, y, hp, tight);

  // same problem in the scaled space, solved densely
  Scaler s = Scaler::Fit(x);
  Points z;
  for (auto &p : x) z.push_back(s.Transform(p));
  Matrix k = Gram(z, 1.0);
  auto ref = testing::SolveSvmDualDense(k, y, std::vector<double>(4, 10.0));
  ASSERT_TRUE(ref.converged);
  double bias = 0.0;
  int free = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (ref.alpha[i] > 1e-8 && ref.alpha[i] < 10.0 - 1e-8) {
      double f = 0.0;
      for (std::size_t j = 0; j < 4; ++j) f += ref.alpha[j] * y[j] * k(i, j);
      bias += y[i] - f;
      ++free;
    }
  }
  ASSERT_GT(free, 0);
  bias /= free;
  for (std::size_t i = 0; i < 4; ++i) {
    double f = bias;
    for (std::size_t j = 0; j < 4; ++j) f += ref.alpha[j] * y[j] * k(i, j);
    EXPECT_NEAR(m.DecisionValue(x[i]), f, 1e-4);
  }
}

TEST(SvmTrain, DualCoefficientInvariants) {
  std::mt19937_64 rng(12);
  Dataset ds = RandomDataset(rng, 30, 4);
  ds.y[0] = ds.y[2] = ds.y[4] = -1;  // imbalance so class bounds differ
  Hyperparams hp{2.0, 0.25, true};
  ClassBounds b = ClassBoxBounds(hp, ds.y);
  EXPECT_NEAR(b.positive, 2.0 * 30 / (2.0 * 12), 1e-12);
  EXPECT_NEAR(b.negative, 2.0 * 30 / (2.0 * 18), 1e-12);
  SvmModel m = TrainSvm(ds.x, ds.y, hp);
  double sum = 0.0;
  for (double a : m.dual_coeffs) {
    EXPECT_GT(std::abs(a), 0.0);
    EXPECT_LE(std::abs(a), std::max(b.positive, b.negative) + 1e-12);
    EXPECT_LE(a, b.positive + 1e-12);
    EXPECT_GE(a, -b.negative - 1e-12);
    sum += a;
  }
  EXPECT_NEAR(sum, 0.0, 1e-6);
  Hyperparams plain{2.0, 0.25, false};
  ClassBounds pb = ClassBoxBounds(plain, ds.y);
  EXPECT_EQ(pb.positive, 2.0);
  EXPECT_EQ(pb.negative, 2.0);
}

TEST(SvmTrain, FreeSupportVectorsSitOnTheMargin) {
  std::mt19937_64 rng(14);
  Dataset ds = RandomDataset(rng, 24, 2);
  Hyperparams hp{5.0, 0.5, false};
  SvmModel m = TrainSvm(ds.x, ds.y, hp);
  int checked = 0;
  for (std::size_t k = 0; k < m.num_support_vectors(); ++k) {
    double a = std::abs(m.dual_coeffs[k]);
    if (a < 1e-6 || a > 5.0 - 1e-6) continue;
    double y = m.dual_coeffs[k] > 0 ? 1.0 : -1.0;
    EXPECT_NEAR(m.DecisionValueScaled(m.support_vectors.Row(k)), y, 1e-3);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(SvmModel, DecisionValueMatchesKernelSum) {
  std::mt19937_64 rng(30);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    SvmModel m;
    const std::size_t d = 3, n = 7;
    m.scaler = Scaler::Fit({{0, 1, 2}, {2, 5, 3}});
    m.support_vectors = Matrix(n, d);
    for (std::size_t i = 0; i < n * d; ++i) m.support_vectors.data()[i] = g(rng);
    for (std::size_t i = 0; i < n; ++i) m.dual_coeffs.push_back(g(rng));
    m.bias = g(rng);
    m.gamma = 0.4;
    std::vector<double> probe{g(rng), g(rng), g(rng)};
    std::vector<double> z(d);
    for (std::size_t k = 0; k < d; ++k)
      z[k] = (probe[k] - m.scaler.mean[k]) / m.scaler.stddev[k];
    double want = m.bias;
    for (std::size_t i = 0; i < n; ++i) {
      double d2 = 0;
      for (std::size_t k = 0; k < d; ++k) {
        double diff = z[k] - m.support_vectors(i, k);
        d2 += diff * diff;
      }
      want += m.dual_coeffs[i] * std::exp(-0.4 * d2);
    }
    EXPECT_NEAR(m.DecisionValue(probe), want, 1e-12);
    EXPECT_EQ(m.DecisionValue(probe),
              m.DecisionValueScaled(m.scaler.Transform(probe)));
  }
}

TEST(SvmModel, PermutationInvariance) {
  std::mt19937_64 rng(41);
  Dataset ds = RandomDataset(rng, 40, 3);
  SmoOptions tight;
  tight.tolerance = 1e-12;
  Hyperparams hp{3.0, 0.3, true};
  SvmModel a = TrainSvm(ds.x, ds.y, hp, tight);
  std::vector<std::size_t> order(40);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Dataset p;
  for (auto i : order) {
    p.x.push_back(ds.x[i]);
    p.y.push_back(ds.y[i]);
  }
  SvmModel b = TrainSvm(p.x, p.y, hp, tight);
  std::normal_distribution<double> g;
  for (int i = 0; i < 50; ++i) {
    std::vector<double> probe{g(rng), g(rng), g(rng)};
    EXPECT_NEAR(a.DecisionValue(probe), b.DecisionValue(probe), 1e-9);
  }
}

TEST(SvmModel, DuplicatedDataGivesSamePredictions) {
  std::mt19937_64 rng(44);
  std::normal_distribution<double> g(0.0, 0.5);
  Dataset ds;
  for (int i = 0; i < 20; ++i) {
    int y = i % 2 ? 1 : -1;
    ds.x.push_back({g(rng) + 2.0 * y, g(rng)});
    ds.y.push_back(y);
  }
  Dataset twice = ds;
  twice.x.insert(twice.x.end(), ds.x.begin(), ds.x.end());
  twice.y.insert(twice.y.end(), ds.y.begin(), ds.y.end());
  SmoOptions tight;
  tight.tolerance = 1e-10;
  Hyperparams hp{1000.0, 0.1, true};
  SvmModel once = TrainSvm(ds.x, ds.y, hp, tight);
  SvmModel dup = TrainSvm(twice.x, twice.y, hp, tight);
  for (double a = -4; a <= 4; a += 0.25)
    for (double b = -2; b <= 2; b += 0.5) {
      std::vector<double> probe{a, b};
      EXPECT_EQ(once.Predict(probe), dup.Predict(probe)) << a << "," << b;
    }
}

TEST(SvmModel, FileRoundTripIsBitExact) {
  testing::TempDir dir("svm");
  std::mt19937_64 rng(50);
  Dataset ds = RandomDataset(rng, 30, 5);
  SvmModel m = TrainSvm(ds.x, ds.y, Hyperparams{1.0, 0.2, true});
  WriteSvmModel(dir / "m.svm", m);
  SvmModel back = ReadSvmModel(dir / "m.svm");
  EXPECT_EQ(back.support_vectors, m.support_vectors);
  EXPECT_EQ(back.dual_coeffs, m.dual_coeffs);
  EXPECT_EQ(back.bias, m.bias);
  EXPECT_EQ(back.gamma, m.gamma);
  EXPECT_EQ(back.c, m.c);
  std::normal_distribution<double> g;
  for (int i = 0; i < 20; ++i) {
    std::vector<double> probe(5);
    for (auto &v : probe) v = g(rng);
    EXPECT_EQ(back.DecisionValue(probe), m.DecisionValue(probe));
  }
  std::ofstream(dir / "bad.svm") << "SVM0";
  EXPECT_THROW(ReadSvmModel(dir / "bad.svm"), ValidationError);
}

TEST(SvmTrain, RejectsBadInput) {
  EXPECT_THROW(TrainSvm({{1.0}, {2.0}}, {1, 1}, Hyperparams{}), ValidationError);
  EXPECT_THROW(TrainSvm({{1.0}, {2.0}}, {1, 0}, Hyperparams{}), ValidationError);
  EXPECT_THROW(TrainSvm({{1.0}, {NAN}}, {1, -1}, Hyperparams{}), ValidationError);
  EXPECT_THROW(TrainSvm({{1.0}, {2.0}}, {1, -1}, Hyperparams{0.0, 1.0, true}),
               ValidationError);
}

TEST(GammaSpec, ParseAndResolve) {
  GammaSpec s = GammaSpec::Parse("scale");
  EXPECT_TRUE(s.heuristic);
  EXPECT_DOUBLE_EQ(s.Resolve(120), 1.0 / 120);
  EXPECT_EQ(s.ToString(), "scale");
  GammaSpec v = GammaSpec::Parse("0.01");
  EXPECT_DOUBLE_EQ(v.Resolve(120), 0.01);
  EXPECT_THROW(GammaSpec::Parse("-1"), ValidationError);
  EXPECT_THROW(GammaSpec::Parse("fast"), ValidationError);
  EXPECT_EQ(DefaultCGrid(), (std::vector<double>{0.1, 1, 10, 100}));
  EXPECT_EQ(DefaultGammaGrid().size(), 5u);
}

// Two folds of points on concentric rings: radius < 1 is negative.
std::vector<CvFoldData> RingFolds(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> ang(0, 2 * M_PI);
  std::normal_distribution<double> jitter(0.0, 0.05);
  auto ring = [&](int n, double r, int label, Points &x, std::vector<int> &y) {
    for (int i = 0; i < n; ++i) {
      double a = ang(rng), rr = r + jitter(rng);
      x.push_back({rr * std::cos(a), rr * std::sin(a)});
      y.push_back(label);
    }
  };
  std::vector<CvFoldData> folds(2);
  for (auto &f : folds) {
    ring(20, 0.5, -1, f.train_x, f.train_y);
    ring(20, 2.0, 1, f.train_x, f.train_y);
    ring(10, 0.5, -1, f.test_x, f.test_y);
    ring(10, 2.0, 1, f.test_x, f.test_y);
  }
  return folds;
}

TEST(GridSearch, SingletonGrid) {
  std::mt19937_64 rng(60);
  auto folds = RingFolds(rng);
  auto r = GridSearch(folds, {7.0}, {GammaSpec::Parse("0.3")}, true);
  EXPECT_EQ(r.table.size(), 1u);
  EXPECT_EQ(r.best.c, 7.0);
  EXPECT_EQ(r.best.gamma, 0.3);
  EXPECT_EQ(r.table[0].total, 40u);
  ASSERT_EQ(r.table[0].fold_scores.size(), 2u);
  EXPECT_EQ(r.table[0].fold_scores[0].size(), 20u);
}

TEST(GridSearch, PicksTheStrictlyBetterPoint) {
  std::mt19937_64 rng(61);
  auto folds = RingFolds(rng);
  // a tiny gamma is nearly linear and cannot separate rings
  auto r = GridSearch(folds, {0.1}, {GammaSpec::Parse("1e-4"),
                                     GammaSpec::Parse("1")}, true);
  ASSERT_EQ(r.table.size(), 2u);
  EXPECT_LT(r.table[0].correct, r.table[1].correct);
  EXPECT_EQ(r.best.gamma, 1.0);
  EXPECT_EQ(r.best_index, 1u);
}

TEST(GridSearch, TiesGoToSmallerParameters) {
  std::mt19937_64 rng(62);
  auto folds = RingFolds(rng);
  auto r = GridSearch(folds, {100.0, 10.0},
                      {GammaSpec::Parse("2"), GammaSpec::Parse("1")}, true);
  ASSERT_EQ(r.table.size(), 4u);
  for (const auto &cell : r.table) ASSERT_EQ(cell.correct, cell.total);
  EXPECT_EQ(r.best.c, 10.0);
  EXPECT_EQ(r.best.gamma, 1.0);
}

TEST(GridSearch, WorkersDoNotChangeResults) {
  std::mt19937_64 rng(63);
  auto folds = RingFolds(rng);
  auto a = GridSearch(folds, DefaultCGrid(), DefaultGammaGrid(), true, {}, 1);
  auto b = GridSearch(folds, DefaultCGrid(), DefaultGammaGrid(), true, {}, 3);
  ASSERT_EQ(a.table.size(), b.table.size());
  for (std::size_t i = 0; i < a.table.size(); ++i)
    EXPECT_EQ(a.table[i].fold_scores, b.table[i].fold_scores);
  EXPECT_EQ(a.best_index, b.best_index);
}

}  // namespace
}  // namespace phonesv
