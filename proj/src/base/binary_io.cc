// src/base/binary_io.cc

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

#include "phonesv/base/binary_io.h"

#include <array>
#include <bit>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

template <typename U>
void PutLe(std::ostream &os, U v) {
  std::array<char, sizeof(U)> bytes;
  for (std::size_t i = 0; i < sizeof(U); ++i)
    bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(bytes.data(), bytes.size());
}

template <typename U>
U GetLe(std::istream &is, std::string_view what) {
  std::array<unsigned char, sizeof(U)> bytes;
  if (!is.read(reinterpret_cast<char *>(bytes.data()), bytes.size()))
    throw ValidationError("truncated input while reading " + std::string(what));
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i)
    v |= static_cast<U>(bytes[i]) << (8 * i);
  return v;
}

}  // namespace

void WriteMagic(std::ostream &os, std::string_view magic) {
  os.write(magic.data(), static_cast<std::streamsize>(magic.size()));
}

void ExpectMagic(std::istream &is, std::string_view magic,
                 std::string_view what) {
  std::string got(magic.size(), '\0');
  if (!is.read(got.data(), static_cast<std::streamsize>(got.size())) ||
      got != magic)
    throw ValidationError(std::string(what) + ": bad magic, expected \"" +
                          std::string(magic) + "\"");
}

void WriteU16(std::ostream &os, std::uint16_t v) { PutLe(os, v); }
void WriteU32(std::ostream &os, std::uint32_t v) { PutLe(os, v); }
void WriteI8(std::ostream &os, std::int8_t v) {
  PutLe(os, static_cast<std::uint8_t>(v));
}
void WriteF32(std::ostream &os, float v) {
  PutLe(os, std::bit_cast<std::uint32_t>(v));
}
void WriteF64(std::ostream &os, double v) {
  PutLe(os, std::bit_cast<std::uint64_t>(v));
}

void WriteShortString(std::ostream &os, std::string_view s) {
  if (s.size() > 0xFFFF)
    throw ValidationError("string too long for uint16 length prefix");
  WriteU16(os, static_cast<std::uint16_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint16_t ReadU16(std::istream &is, std::string_view what) {
  return GetLe<std::uint16_t>(is, what);
}
std::uint32_t ReadU32(std::istream &is, std::string_view what) {
  return GetLe<std::uint32_t>(is, what);
}
std::int8_t ReadI8(std::istream &is, std::string_view what) {
  return static_cast<std::int8_t>(GetLe<std::uint8_t>(is, what));
}
float ReadF32(std::istream &is, std::string_view what) {
  return std::bit_cast<float>(GetLe<std::uint32_t>(is, what));
}
double ReadF64(std::istream &is, std::string_view what) {
  return std::bit_cast<double>(GetLe<std::uint64_t>(is, what));
}

std::string ReadShortString(std::istream &is, std::string_view what) {
  std::uint16_t len = ReadU16(is, what);
  std::string s(len, '\0');
  if (len > 0 && !is.read(s.data(), len))
    throw ValidationError("truncated input while reading " + std::string(what));
  return s;
}

}  // namespace phonesv
