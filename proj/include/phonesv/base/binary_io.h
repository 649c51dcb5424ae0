// include/phonesv/base/binary_io.h

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

#ifndef PHONESV_BASE_BINARY_IO_H_
#define PHONESV_BASE_BINARY_IO_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace phonesv {

// Little-endian primitives shared by the PGV1, SVV1 and SVM1 formats.
// Readers throw ValidationError on truncated input; `what` names the field.

void WriteMagic(std::ostream &os, std::string_view magic);
void ExpectMagic(std::istream &is, std::string_view magic,
                 std::string_view what);

void WriteU16(std::ostream &os, std::uint16_t v);
void WriteU32(std::ostream &os, std::uint32_t v);
void WriteI8(std::ostream &os, std::int8_t v);
void WriteF32(std::ostream &os, float v);
void WriteF64(std::ostream &os, double v);
// uint16 length followed by the raw bytes.
void WriteShortString(std::ostream &os, std::string_view s);

std::uint16_t ReadU16(std::istream &is, std::string_view what);
std::uint32_t ReadU32(std::istream &is, std::string_view what);
std::int8_t ReadI8(std::istream &is, std::string_view what);
float ReadF32(std::istream &is, std::string_view what);
double ReadF64(std::istream &is, std::string_view what);
std::string ReadShortString(std::istream &is, std::string_view what);

}  // namespace phonesv

#endif  // PHONESV_BASE_BINARY_IO_H_
