// src/svm/grid_search.cc

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

#include "phonesv/svm/grid_search.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "phonesv/base/error.h"
#include "phonesv/base/parallel.h"

namespace phonesv {

double GammaSpec::Resolve(std::size_t dim) const {
  if (!heuristic) return value;
  if (dim == 0) throw ValidationError("cannot resolve gamma for dimension 0");
  return 1.0 / static_cast<double>(dim);
}

std::string GammaSpec::ToString() const {
  if (heuristic) return "scale";
  std::ostringstream ss;
  ss << value;
  return ss.str();
}

GammaSpec GammaSpec::Parse(std::string_view text) {
  if (text == "scale") return {true, 0.0};
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(v > 0.0) ||
      !std::isfinite(v))
    throw ValidationError("invalid gamma '" + std::string(text) +
                          "' (expected 'scale' or a positive number)");
  return {false, v};
}

std::vector<double> DefaultCGrid() { return {0.1, 1.0, 10.0, 100.0}; }

std::vector<GammaSpec> DefaultGammaGrid() {
  return {{true, 0.0}, {false, 1e-4}, {false, 1e-3}, {false, 1e-2},
          {false, 1e-1}};
}

GridSearchResult GridSearch(const std::vector<CvFoldData> &folds,
                            const std::vector<double> &c_grid,
                            const std::vector<GammaSpec> &gamma_grid,
                            bool class_weighting, const SmoOptions &opts,
                            int workers) {
  if (folds.size() < 2)
    throw ValidationError("grid search needs at least 2 folds, got " +
                          std::to_string(folds.size()));
  if (c_grid.empty() || gamma_grid.empty())
    throw ValidationError("grid search needs non-empty C and gamma grids");
  for (double c : c_grid)
    if (!(c > 0.0)) throw ValidationError("C grid values must be positive");

  std::size_t dim = 0;
  for (const CvFoldData &f : folds)
    if (!f.train_x.empty()) dim = f.train_x.front().size();

  GridSearchResult result;
  for (double c : c_grid)
    for (const GammaSpec &g : gamma_grid) {
      GridCell cell;
      cell.c = c;
      cell.gamma_spec = g;
      cell.gamma = g.Resolve(dim);
      cell.fold_scores.resize(folds.size());
      result.table.push_back(std::move(cell));
    }
  std::stable_sort(result.table.begin(), result.table.end(),
                   [](const GridCell &a, const GridCell &b) {
                     return a.c != b.c ? a.c < b.c : a.gamma < b.gamma;
                   });

  for (std::size_t f = 0; f < folds.size(); ++f) {
    const CvFoldData &fold = folds[f];
    PreparedTrainingSet train = [&] {
      try {
        return PreparedTrainingSet(fold.train_x, fold.train_y);
      } catch (const ValidationError &e) {
        throw ValidationError("fold " + std::to_string(f) + ": " + e.what());
      }
    }();
    train.PrecomputeDistances();
    std::vector<std::vector<double>> test_scaled;
    test_scaled.reserve(fold.test_x.size());
    for (const auto &x : fold.test_x)
      test_scaled.push_back(train.scaler().Transform(x));

    ParallelFor(result.table.size(), workers, [&](std::size_t cell_index) {
      GridCell &cell = result.table[cell_index];
      SvmModel model = train.Train({cell.c, cell.gamma, class_weighting}, opts);
      auto &scores = cell.fold_scores[f];
      scores.reserve(test_scaled.size());
      for (const auto &x : test_scaled)
        scores.push_back(model.DecisionValueScaled(x));
    });
  }

  for (GridCell &cell : result.table) {
    for (std::size_t f = 0; f < folds.size(); ++f) {
      const auto &scores = cell.fold_scores[f];
      for (std::size_t i = 0; i < scores.size(); ++i) {
        int predicted = scores[i] >= 0.0 ? 1 : -1;
        cell.correct += predicted == folds[f].test_y[i];
      }
      cell.total += scores.size();
    }
  }

  for (std::size_t i = 1; i < result.table.size(); ++i)
    if (result.table[i].correct > result.table[result.best_index].correct)
      result.best_index = i;
  const GridCell &best = result.table[result.best_index];
  result.best = {best.c, best.gamma, class_weighting};
  return result;
}

}  // namespace phonesv
