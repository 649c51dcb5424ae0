// src/svm/smo.cc

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

#include "phonesv/svm/smo.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

constexpr double kTau = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// LRU cache of signed kernel rows Q_ij = y_i y_j K_ij.
class QRowCache {
 public:
  QRowCache(const KernelMatrix &kernel, std::span<const int> y,
            std::size_t budget_bytes)
      : kernel_(kernel), y_(y), n_(kernel.size()), slots_(n_, lru_.end()) {
    std::size_t row_bytes = std::max<std::size_t>(n_ * sizeof(double), 1);
    capacity_ = std::max<std::size_t>(budget_bytes / row_bytes, 2);
  }

  // Pointer stays valid until a later Get evicts the row; the two most
  // recently requested rows are never evicted.
  const double *Get(std::size_t i) {
    auto it = slots_[i];
    if (it != lru_.end()) {
      lru_.splice(lru_.begin(), lru_, it);
      return it->row.data();
    }
    std::vector<double> row;
    if (lru_.size() >= capacity_) {
      slots_[lru_.back().index] = lru_.end();
      row = std::move(lru_.back().row);
      lru_.pop_back();
    }
    row.resize(n_);
    kernel_.Row(i, row);
    for (std::size_t j = 0; j < n_; ++j) row[j] *= y_[i] * y_[j];
    lru_.push_front({i, std::move(row)});
    slots_[i] = lru_.begin();
    return lru_.front().row.data();
  }

 private:
  struct Entry {
    std::size_t index;
    std::vector<double> row;
  };
  const KernelMatrix &kernel_;
  std::span<const int> y_;
  std::size_t n_;
  std::size_t capacity_;
  std::list<Entry> lru_;
  std::vector<std::list<Entry>::iterator> slots_;
};

}  // namespace

DualSolution SolveDual(const KernelMatrix &kernel, std::span<const int> labels,
                       double c_positive, double c_negative,
                       const SmoOptions &opts) {
  const std::size_t n = kernel.size();
  if (labels.size() != n)
    throw ValidationError("label count does not match kernel size");
  if (!(c_positive > 0.0) || !(c_negative > 0.0))
    throw ValidationError("SVM regularization C must be positive");
  bool has_pos = false, has_neg = false;
  for (int y : labels) {
    if (y == 1)
      has_pos = true;
    else if (y == -1)
      has_neg = true;
    else
      throw ValidationError("SVM labels must be +1 or -1");
  }
  if (!has_pos || !has_neg)
    throw ValidationError("SVM training needs both classes");

  const std::vector<int> y(labels.begin(), labels.end());
  std::vector<double> c(n), qd(n), alpha(n, 0.0), grad(n, -1.0);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = y[i] > 0 ? c_positive : c_negative;
    qd[i] = kernel.Diagonal(i);
  }
  auto is_upper = [&](std::size_t t) { return alpha[t] >= c[t]; };
  auto is_lower = [&](std::size_t t) { return alpha[t] <= 0.0; };
  auto in_up = [&](std::size_t t) {
    return y[t] > 0 ? !is_upper(t) : !is_lower(t);
  };
  auto in_low = [&](std::size_t t) {
    return y[t] > 0 ? !is_lower(t) : !is_upper(t);
  };

  QRowCache cache(kernel, y, opts.cache_bytes);
  long long iter = 0;
  for (;; ++iter) {
    // i maximizes -y_t G_t over I_up.
    double gmax = -kInf;
    std::size_t i = n;
    for (std::size_t t = 0; t < n; ++t)
      if (in_up(t) && -y[t] * grad[t] > gmax) {
        gmax = -y[t] * grad[t];
        i = t;
      }

    // j minimizes the second-order objective decrease over I_low.
    double gmax2 = -kInf;
    std::size_t j = n;
    double obj_min = kInf;
    const double *qi = i < n ? cache.Get(i) : nullptr;
    for (std::size_t t = 0; t < n; ++t) {
      if (!in_low(t)) continue;
      double yg = y[t] * grad[t];
      gmax2 = std::max(gmax2, yg);
      if (!qi) continue;
      double grad_diff = gmax + yg;
      if (grad_diff > 0.0) {
        double quad = qd[i] + qd[t] - 2.0 * y[i] * y[t] * qi[t];
        double obj = -(grad_diff * grad_diff) / (quad > 0.0 ? quad : kTau);
        if (obj < obj_min) {
          obj_min = obj;
          j = t;
        }
      }
    }
    if (gmax + gmax2 < opts.tolerance || j == n) break;
    if (iter >= opts.max_iterations)
      throw ProcessingError("SMO did not converge within " +
                            std::to_string(opts.max_iterations) +
                            " iterations (violation " +
                            std::to_string(gmax + gmax2) + ")");

    qi = cache.Get(i);
    const double *qj = cache.Get(j);
    qi = cache.Get(i);
    const double ci = c[i], cj = c[j];
    const double old_ai = alpha[i], old_aj = alpha[j];

    if (y[i] != y[j]) {
      double quad = qd[i] + qd[j] + 2.0 * qi[j];
      if (quad <= 0.0) quad = kTau;
      double delta = (-grad[i] - grad[j]) / quad;
      double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = -diff;
      }
      if (diff > ci - cj) {
        if (alpha[i] > ci) {
          alpha[i] = ci;
          alpha[j] = ci - diff;
        }
      } else if (alpha[j] > cj) {
        alpha[j] = cj;
        alpha[i] = cj + diff;
      }
    } else {
      double quad = qd[i] + qd[j] - 2.0 * qi[j];
      if (quad <= 0.0) quad = kTau;
      double delta = (grad[i] - grad[j]) / quad;
      double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > ci) {
        if (alpha[i] > ci) {
          alpha[i] = ci;
          alpha[j] = sum - ci;
        }
      } else if (alpha[j] < 0.0) {
        alpha[j] = 0.0;
        alpha[i] = sum;
      }
      if (sum > cj) {
        if (alpha[j] > cj) {
          alpha[j] = cj;
          alpha[i] = sum - cj;
        }
      } else if (alpha[i] < 0.0) {
        alpha[i] = 0.0;
        alpha[j] = sum;
      }
    }

    const double dai = alpha[i] - old_ai, daj = alpha[j] - old_aj;
    for (std::size_t t = 0; t < n; ++t) grad[t] += qi[t] * dai + qj[t] * daj;
  }

  DualSolution sol;
  sol.iterations = iter;

  // Bias: mean of y_t G_t over free vectors, else midpoint of the bounds.
  double ub = kInf, lb = -kInf, sum_free = 0.0;
  std::size_t num_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    double yg = y[t] * grad[t];
    if (is_upper(t)) {
      if (y[t] < 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else if (is_lower(t)) {
      if (y[t] > 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else {
      ++num_free;
      sum_free += yg;
    }
  }
  double rho = num_free > 0 ? sum_free / static_cast<double>(num_free)
                            : (ub + lb) / 2.0;
  sol.bias = -rho;

  double v = 0.0;
  for (std::size_t t = 0; t < n; ++t) v += alpha[t] * (grad[t] - 1.0);
  sol.objective = -v / 2.0;
  sol.alpha = std::move(alpha);
  return sol;
}

double DualObjective(const KernelMatrix &kernel, std::span<const int> labels,
                     std::span<const double> alpha) {
  const std::size_t n = kernel.size();
  std::vector<double> row(n);
  double linear = 0.0, quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    linear += alpha[i];
    if (alpha[i] == 0.0) continue;
    kernel.Row(i, row);
    for (std::size_t j = 0; j < n; ++j)
      quad += alpha[i] * alpha[j] * labels[i] * labels[j] * row[j];
  }
  return linear - 0.5 * quad;
}

}  // namespace phonesv
