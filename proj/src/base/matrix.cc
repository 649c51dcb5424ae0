// src/base/matrix.cc

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

#include "phonesv/base/matrix.h"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace phonesv {

Matrix Matrix::RowRange(std::size_t begin, std::size_t count) const {
  assert(begin + count <= rows_);
  Matrix out(count, cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(begin * cols_),
              count * cols_, out.data_.begin());
  return out;
}

void Matrix::TrimRows(std::size_t rows) {
  assert(rows <= rows_);
  rows_ = rows;
  data_.resize(rows * cols_);
}

bool Matrix::AllFinite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace phonesv
