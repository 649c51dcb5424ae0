// src/svm/svm_model.cc

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

#include "phonesv/svm/svm_model.h"

#include <cmath>
#include <fstream>
#include <string>

#include "phonesv/base/binary_io.h"
#include "phonesv/base/error.h"
#include "phonesv/svm/kernel.h"

namespace phonesv {

double SvmModel::DecisionValueScaled(std::span<const double> scaled) const {
  if (scaled.size() != support_vectors.cols())
    throw ValidationError("input dimension " + std::to_string(scaled.size()) +
                          " does not match model dimension " +
                          std::to_string(support_vectors.cols()));
  double sum = 0.0;
  for (std::size_t k = 0; k < dual_coeffs.size(); ++k)
    sum += dual_coeffs[k] *
           std::exp(-gamma * SquaredDistance(support_vectors.Row(k), scaled));
  return sum + bias;
}

double SvmModel::DecisionValue(std::span<const double> x) const {
  return DecisionValueScaled(scaler.Transform(x));
}

int SvmModel::Predict(std::span<const double> x) const {
  return DecisionValue(x) >= 0.0 ? 1 : -1;
}

ClassBounds ClassBoxBounds(const Hyperparams &hp,
                           std::span<const int> labels) {
  if (!hp.class_weighting) return {hp.c, hp.c};
  double n_pos = 0, n_neg = 0;
  for (int y : labels) (y > 0 ? n_pos : n_neg) += 1;
  const double n = n_pos + n_neg;
  return {hp.c * n / (2.0 * n_pos), hp.c * n / (2.0 * n_neg)};
}

PreparedTrainingSet::PreparedTrainingSet(
    const std::vector<std::vector<double>> &examples, std::vector<int> labels)
    : labels_(std::move(labels)) {
  if (examples.size() != labels_.size())
    throw ValidationError("example/label count mismatch");
  bool pos = false, neg = false;
  for (int y : labels_) {
    if (y == 1) pos = true;
    else if (y == -1) neg = true;
    else throw ValidationError("SVM labels must be +1 or -1");
  }
  if (!pos || !neg)
    throw ValidationError("SVM training data contains a single class");
  scaler_ = Scaler::Fit(examples);
  scaled_.reserve(examples.size());
  for (const auto &x : examples) scaled_.push_back(scaler_.Transform(x));
}

void PreparedTrainingSet::PrecomputeDistances(std::size_t max_precomputed) {
  if (distances_.empty() && scaled_.size() <= max_precomputed)
    distances_ = PairwiseSquaredDistances(scaled_);
}

SvmModel PreparedTrainingSet::Train(const Hyperparams &hp,
                                    const SmoOptions &opts) const {
  if (!(hp.c > 0.0) || !(hp.gamma > 0.0))
    throw ValidationError("hyperparameters need C > 0 and gamma > 0");
  const ClassBounds bounds = ClassBoxBounds(hp, labels_);
  DualSolution sol;
  if (!distances_.empty()) {
    RbfFromDistances kernel(distances_, hp.gamma);
    sol = SolveDual(kernel, labels_, bounds.positive, bounds.negative, opts);
  } else {
    RbfKernelMatrix kernel(scaled_, hp.gamma);
    sol = SolveDual(kernel, labels_, bounds.positive, bounds.negative, opts);
  }

  SvmModel model;
  model.bias = sol.bias;
  model.gamma = hp.gamma;
  model.c = hp.c;
  model.scaler = scaler_;
  std::size_t n_sv = 0;
  for (double a : sol.alpha) n_sv += a > 0.0;
  model.support_vectors = Matrix(n_sv, dim());
  for (std::size_t i = 0, k = 0; i < sol.alpha.size(); ++i) {
    if (!(sol.alpha[i] > 0.0)) continue;
    model.dual_coeffs.push_back(sol.alpha[i] * labels_[i]);
    std::copy(scaled_[i].begin(), scaled_[i].end(),
              model.support_vectors.Row(k++).begin());
  }
  return model;
}

SvmModel TrainSvm(const std::vector<std::vector<double>> &examples,
                  const std::vector<int> &labels, const Hyperparams &hp,
                  const SmoOptions &opts) {
  PreparedTrainingSet set(examples, labels);
  return set.Train(hp, opts);
}

void WriteSvmModel(const std::filesystem::path &path, const SvmModel &model) {
  const std::size_t dim = model.dim();
  if (model.support_vectors.cols() != dim && model.num_support_vectors() > 0)
    throw ValidationError("model support vectors do not match scaler dimension");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ProcessingError("cannot write " + path.string());
  WriteMagic(os, "SVM1");
  WriteU32(os, static_cast<std::uint32_t>(dim));
  WriteU32(os, static_cast<std::uint32_t>(model.num_support_vectors()));
  WriteF64(os, model.bias);
  WriteF64(os, model.gamma);
  WriteF64(os, model.c);
  for (double v : model.scaler.mean) WriteF64(os, v);
  for (double v : model.scaler.stddev) WriteF64(os, v);
  for (double v : model.dual_coeffs) WriteF64(os, v);
  for (double v : model.support_vectors.data()) WriteF64(os, v);
  if (!os) throw ProcessingError("error writing " + path.string());
}

SvmModel ReadSvmModel(const std::filesystem::path &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("cannot open model " + path.string());
  const std::string name = path.string();
  ExpectMagic(is, "SVM1", name);
  std::uint32_t dim = ReadU32(is, name + " dimension");
  std::uint32_t n_sv = ReadU32(is, name + " support vector count");
  SvmModel model;
  model.bias = ReadF64(is, name + " bias");
  model.gamma = ReadF64(is, name + " gamma");
  model.c = ReadF64(is, name + " C");
  model.scaler.mean.resize(dim);
  model.scaler.stddev.resize(dim);
  for (double &v : model.scaler.mean) v = ReadF64(is, name + " scaler mean");
  for (double &v : model.scaler.stddev) v = ReadF64(is, name + " scaler std");
  model.dual_coeffs.resize(n_sv);
  for (double &v : model.dual_coeffs) v = ReadF64(is, name + " dual coeffs");
  model.support_vectors = Matrix(n_sv, dim);
  for (double &v : model.support_vectors.data())
    v = ReadF64(is, name + " support vectors");
  return model;
}

}  // namespace phonesv
