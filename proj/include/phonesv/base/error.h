// include/phonesv/base/error.h

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

#ifndef PHONESV_BASE_ERROR_H_
#define PHONESV_BASE_ERROR_H_

#include <stdexcept>
#include <string>

namespace phonesv {

// Bad input: malformed files, violated invariants, precondition failures.
// The command-line front end maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string &what)
      : std::runtime_error(what) {}
};

// Failure while processing otherwise valid input (I/O, non-convergence).
// Maps to exit code 2.
class ProcessingError : public std::runtime_error {
 public:
  explicit ProcessingError(const std::string &what)
      : std::runtime_error(what) {}
};

}  // namespace phonesv

#endif  // PHONESV_BASE_ERROR_H_
