// include/phonesv/svm/grid_search.h

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

#ifndef PHONESV_SVM_GRID_SEARCH_H_
#define PHONESV_SVM_GRID_SEARCH_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "phonesv/svm/svm_model.h"

namespace phonesv {

// A gamma grid entry: a fixed value or the 1 / (D * sigma^2) heuristic,
// which is 1 / D for z-scored features.
struct GammaSpec {
  bool heuristic = false;
  double value = 0.0;

  double Resolve(std::size_t dim) const;
  std::string ToString() const;  // "scale" or the value
  // Accepts "scale" or a positive number; throws ValidationError otherwise.
  static GammaSpec Parse(std::string_view text);
};

std::vector<double> DefaultCGrid();
std::vector<GammaSpec> DefaultGammaGrid();

// One cross-validation fold: training examples and held-out test examples.
struct CvFoldData {
  std::vector<std::vector<double>> train_x;
  std::vector<int> train_y;
  std::vector<std::vector<double>> test_x;
  std::vector<int> test_y;
};

struct GridCell {
  double c = 0.0;
  GammaSpec gamma_spec;
  double gamma = 0.0;                            // resolved
  std::vector<std::vector<double>> fold_scores;  // decision values per fold
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy() const {
    return total ? static_cast<double>(correct) / total : 0.0;
  }
};

struct GridSearchResult {
  Hyperparams best;
  std::size_t best_index = 0;
  std::vector<GridCell> table;  // sorted by (C, resolved gamma)
};

// Trains every (C, gamma) on every fold and picks the cell with the highest
// pooled accuracy (total correct / total scored); ties go to the smaller C,
// then the smaller gamma. Throws ValidationError for fewer than two folds,
// an empty grid, or a fold whose training side holds a single class.
GridSearchResult GridSearch(const std::vector<CvFoldData> &folds,
                            const std::vector<double> &c_grid,
                            const std::vector<GammaSpec> &gamma_grid,
                            bool class_weighting, const SmoOptions &opts = {},
                            int workers = 1);

}  // namespace phonesv

#endif  // PHONESV_SVM_GRID_SEARCH_H_
