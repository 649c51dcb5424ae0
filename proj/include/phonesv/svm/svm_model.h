// include/phonesv/svm/svm_model.h

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

#ifndef PHONESV_SVM_SVM_MODEL_H_
#define PHONESV_SVM_SVM_MODEL_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "phonesv/base/matrix.h"
#include "phonesv/svm/scaler.h"
#include "phonesv/svm/smo.h"

namespace phonesv {

struct Hyperparams {
  double c = 1.0;
  double gamma = 1e-3;
  // Scales C per class by n / (2 * n_class).
  bool class_weighting = true;
};

// Trained two-class RBF SVM. Support vectors live in the scaled space;
// raw inputs always pass through `scaler` first.
struct SvmModel {
  Matrix support_vectors;            // n_sv x D, scaled
  std::vector<double> dual_coeffs;   // alpha_k * y_k
  double bias = 0.0;
  double gamma = 0.0;
  double c = 0.0;
  Scaler scaler;

  std::size_t dim() const { return scaler.dim(); }
  std::size_t num_support_vectors() const { return dual_coeffs.size(); }

  // sum_k coef_k K(sv_k, scale(x)) + bias. Throws on dimension mismatch.
  double DecisionValue(std::span<const double> x) const;
  // Same, for an input already passed through `scaler`.
  double DecisionValueScaled(std::span<const double> scaled) const;
  // +1 when DecisionValue >= 0, else -1.
  int Predict(std::span<const double> x) const;
};

// Per-class box constraints implied by the hyperparameters.
struct ClassBounds {
  double positive;
  double negative;
};
ClassBounds ClassBoxBounds(const Hyperparams &hp, std::span<const int> labels);

// Training data after validation and z-scoring. Holds the pairwise
// distance matrix once computed so several (C, gamma) can reuse it.
class PreparedTrainingSet {
 public:
  // Throws ValidationError on <2 examples, ragged or non-finite input,
  // labels other than +1/-1, or a single class.
  PreparedTrainingSet(const std::vector<std::vector<double>> &examples,
                      std::vector<int> labels);

  const Scaler &scaler() const { return scaler_; }
  const std::vector<std::vector<double>> &scaled() const { return scaled_; }
  const std::vector<int> &labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t dim() const { return scaler_.dim(); }

  // Computes the n x n squared distances unless n exceeds
  // `max_precomputed`; afterwards Train() evaluates kernels from it.
  void PrecomputeDistances(std::size_t max_precomputed = 4096);

  SvmModel Train(const Hyperparams &hp, const SmoOptions &opts = {}) const;

 private:
  Scaler scaler_;
  std::vector<std::vector<double>> scaled_;
  std::vector<int> labels_;
  Matrix distances_;
};

// PreparedTrainingSet(...).Train(hp, opts).
SvmModel TrainSvm(const std::vector<std::vector<double>> &examples,
                  const std::vector<int> &labels, const Hyperparams &hp,
                  const SmoOptions &opts = {});

// SVM1, little-endian:
//   "SVM1" | uint32 D | uint32 n_sv | f64 bias, gamma, C |
//   D f64 mean | D f64 std | n_sv f64 dual coeffs | n_sv*D f64 SVs
void WriteSvmModel(const std::filesystem::path &path, const SvmModel &model);
SvmModel ReadSvmModel(const std::filesystem::path &path);

}  // namespace phonesv

#endif  // PHONESV_SVM_SVM_MODEL_H_
