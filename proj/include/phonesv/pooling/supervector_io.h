// include/phonesv/pooling/supervector_io.h

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

#ifndef PHONESV_POOLING_SUPERVECTOR_IO_H_
#define PHONESV_POOLING_SUPERVECTOR_IO_H_

#include <cstddef>
#include <filesystem>
#include <vector>

#include "phonesv/pooling/supervector.h"

namespace phonesv {

// SVV1, little-endian:
//   "SVV1" | uint32 dim | uint32 count |
//   count x (uint16 len + utterance_id, uint16 len + speaker_id,
//            int8 label, dim float32)
// All records must have `dim` values.
void WriteSuperVectors(const std::filesystem::path &path, std::size_t dim,
                       const std::vector<SuperVector> &records);

std::vector<SuperVector> ReadSuperVectors(const std::filesystem::path &path,
                                          std::size_t *dim = nullptr);

}  // namespace phonesv

#endif  // PHONESV_POOLING_SUPERVECTOR_IO_H_
