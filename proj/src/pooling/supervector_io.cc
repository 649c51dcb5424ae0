// src/pooling/supervector_io.cc

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

#include "phonesv/pooling/supervector_io.h"

#include <fstream>
#include <string>

#include "phonesv/base/binary_io.h"
#include "phonesv/base/error.h"

namespace phonesv {

void WriteSuperVectors(const std::filesystem::path &path, std::size_t dim,
                       const std::vector<SuperVector> &records) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ProcessingError("cannot write " + path.string());
  WriteMagic(os, "SVV1");
  WriteU32(os, static_cast<std::uint32_t>(dim));
  WriteU32(os, static_cast<std::uint32_t>(records.size()));
  for (const SuperVector &sv : records) {
    if (sv.values.size() != dim)
      throw ValidationError("super vector '" + sv.utterance_id + "' has " +
                            std::to_string(sv.values.size()) +
                            " values, file dimension is " +
                            std::to_string(dim));
    WriteShortString(os, sv.utterance_id);
    WriteShortString(os, sv.speaker_id);
    WriteI8(os, static_cast<std::int8_t>(sv.label));
    for (double v : sv.values) WriteF32(os, static_cast<float>(v));
  }
  if (!os) throw ProcessingError("error writing " + path.string());
}

std::vector<SuperVector> ReadSuperVectors(const std::filesystem::path &path,
                                          std::size_t *dim_out) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("cannot open " + path.string());
  const std::string name = path.string();
  ExpectMagic(is, "SVV1", name);
  std::uint32_t dim = ReadU32(is, name + " dimension");
  std::uint32_t count = ReadU32(is, name + " record count");
  std::vector<SuperVector> records(count);
  for (SuperVector &sv : records) {
    sv.utterance_id = ReadShortString(is, name + " utterance id");
    sv.speaker_id = ReadShortString(is, name + " speaker id");
    std::int8_t label = ReadI8(is, name + " label");
    if (label < -1 || label > 1)
      throw ValidationError(name + ": invalid label " + std::to_string(label));
    sv.label = static_cast<Label>(label);
    sv.values.resize(dim);
    for (double &v : sv.values) v = ReadF32(is, name + " values");
  }
  if (dim_out) *dim_out = dim;
  return records;
}

}  // namespace phonesv
