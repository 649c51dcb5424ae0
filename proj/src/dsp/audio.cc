// src/dsp/audio.cc

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

#include "phonesv/dsp/audio.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "phonesv/base/error.h"

namespace phonesv {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t Le32(const unsigned char *p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t Le16(const unsigned char *p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

double DecodeSample(const unsigned char *p, std::uint16_t format,
                    std::uint16_t bits) {
  if (format == kFormatFloat) {
    float f;
    std::uint32_t u = Le32(p);
    std::memcpy(&f, &u, sizeof f);
    return f;
  }
  switch (bits) {
    case 8:
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16:
      return static_cast<std::int16_t>(Le16(p)) / 32768.0;
    case 24: {
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    case 32:
      return static_cast<std::int32_t>(Le32(p)) / 2147483648.0;
  }
  return 0.0;
}

void PutLe(std::string &out, std::uint32_t v, int bytes) {
  for (int i = 0; i < bytes; ++i)
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace

AudioClip LoadAudio(const std::filesystem::path &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("cannot open audio file " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(is)),
                                 std::istreambuf_iterator<char>());
  const std::string name = path.string();
  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    throw ValidationError(name + ": not a RIFF/WAVE file");

  std::uint16_t format = 0, channels = 0, bits = 0, block_align = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  const unsigned char *data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const unsigned char *chunk = buf.data() + pos;
    std::uint32_t size = Le32(chunk + 4);
    std::size_t body = pos + 8;
    std::size_t avail = std::min<std::size_t>(size, buf.size() - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (avail < 16) throw ValidationError(name + ": short fmt chunk");
      const unsigned char *f = buf.data() + body;
      format = Le16(f);
      channels = Le16(f + 2);
      rate = Le32(f + 4);
      block_align = Le16(f + 12);
      bits = Le16(f + 14);
      if (format == kFormatExtensible) {
        if (avail < 26) throw ValidationError(name + ": short extensible fmt");
        format = Le16(f + 24);  // first two bytes of the subformat GUID
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = buf.data() + body;
      data_size = avail;
    }
    pos = body + size + (size & 1);
  }

  if (!have_fmt) throw ValidationError(name + ": missing fmt chunk");
  if (!data) throw ValidationError(name + ": missing data chunk");
  bool int_ok = format == kFormatPcm &&
                (bits == 8 || bits == 16 || bits == 24 || bits == 32);
  bool float_ok = format == kFormatFloat && bits == 32;
  if (!int_ok && !float_ok)
    throw ValidationError(name + ": unsupported encoding (format " +
                          std::to_string(format) + ", " +
                          std::to_string(bits) + " bits)");
  if (channels < 1 || channels > 2)
    throw ValidationError(name + ": unsupported channel count " +
                          std::to_string(channels));
  if (rate == 0) throw ValidationError(name + ": zero sample rate");
  std::size_t bytes_per_sample = bits / 8;
  if (block_align != bytes_per_sample * channels)
    throw ValidationError(name + ": inconsistent block alignment");

  std::size_t frames = data_size / block_align;
  if (frames == 0) throw ValidationError(name + ": zero-length audio");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(rate);
  clip.samples.resize(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    const unsigned char *frame = data + i * block_align;
    double sum = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c)
      sum += DecodeSample(frame + c * bytes_per_sample, format, bits);
    double v = sum / channels;
    if (!std::isfinite(v))
      throw ValidationError(name + ": non-finite sample at index " +
                            std::to_string(i));
    clip.samples[i] = std::clamp(v, -1.0, 1.0);
  }
  return clip;
}

void WriteWav16(const std::filesystem::path &path,
                const std::vector<std::vector<double>> &channels,
                int sample_rate) {
  if (channels.empty() || sample_rate <= 0)
    throw ValidationError("WriteWav16: need at least one channel and a rate");
  const std::size_t frames = channels.front().size();
  const auto nch = static_cast<std::uint32_t>(channels.size());
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(frames * nch * 2);

  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutLe(out, 36 + data_bytes, 4);
  out += "WAVEfmt ";
  PutLe(out, 16, 4);
  PutLe(out, kFormatPcm, 2);
  PutLe(out, nch, 2);
  PutLe(out, static_cast<std::uint32_t>(sample_rate), 4);
  PutLe(out, static_cast<std::uint32_t>(sample_rate) * nch * 2, 4);
  PutLe(out, nch * 2, 2);
  PutLe(out, 16, 2);
  out += "data";
  PutLe(out, data_bytes, 4);
  for (std::size_t i = 0; i < frames; ++i) {
    for (const auto &ch : channels) {
      double v = std::clamp(ch.at(i), -1.0, 32767.0 / 32768.0);
      auto s = static_cast<std::int16_t>(std::lround(v * 32768.0));
      PutLe(out, static_cast<std::uint16_t>(s), 2);
    }
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ProcessingError("cannot write " + path.string());
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
}

void WriteWav16(const std::filesystem::path &path, const AudioClip &clip) {
  WriteWav16(path, std::vector<std::vector<double>>{clip.samples},
             clip.sample_rate);
}

}  // namespace phonesv
