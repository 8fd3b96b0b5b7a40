// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vsumm/feature_file.h"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

#include "vsumm/error.h"

namespace vsumm {
namespace {

uint32_t DecodeU32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

void EncodeU32(uint32_t v, unsigned char* p) {
  p[0] = static_cast<unsigned char>(v & 0xff);
  p[1] = static_cast<unsigned char>((v >> 8) & 0xff);
  p[2] = static_cast<unsigned char>((v >> 16) & 0xff);
  p[3] = static_cast<unsigned char>((v >> 24) & 0xff);
}

}  // namespace

FeatureValues ReadFeatureFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open feature file: " + path.string());

  std::array<unsigned char, 16> header;
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() != static_cast<std::streamsize>(header.size())) {
    throw Error("malformed header (truncated) in feature file: " +
                path.string());
  }
  if (std::memcmp(header.data(), kFeatureMagic, 4) != 0) {
    throw Error("malformed header (bad magic) in feature file: " +
                path.string());
  }
  const uint32_t version = DecodeU32(header.data() + 4);
  if (version != kFeatureVersion) {
    throw Error("malformed header (unsupported version " +
                std::to_string(version) +
                ") in feature file: " + path.string());
  }
  const uint32_t rows = DecodeU32(header.data() + 8);
  const uint32_t cols = DecodeU32(header.data() + 12);

  const size_t count = static_cast<size_t>(rows) * cols;
  std::vector<unsigned char> payload(count * 4);
  in.read(reinterpret_cast<char*>(payload.data()),
          static_cast<std::streamsize>(payload.size()));
  if (static_cast<size_t>(in.gcount()) != payload.size()) {
    throw Error("feature file truncated: " + path.string());
  }

  FeatureValues values(rows, cols);
  float* out = values.data();
  for (size_t i = 0; i < count; ++i) {
    const uint32_t bits = DecodeU32(payload.data() + 4 * i);
    out[i] = std::bit_cast<float>(bits);
  }
  return values;
}

void WriteFeatureFile(const std::filesystem::path& path,
                      const FeatureValues& values) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write feature file: " + path.string());

  std::array<unsigned char, 16> header;
  std::memcpy(header.data(), kFeatureMagic, 4);
  EncodeU32(kFeatureVersion, header.data() + 4);
  EncodeU32(static_cast<uint32_t>(values.rows()), header.data() + 8);
  EncodeU32(static_cast<uint32_t>(values.cols()), header.data() + 12);
  out.write(reinterpret_cast<const char*>(header.data()), header.size());

  const size_t count = static_cast<size_t>(values.size());
  std::vector<unsigned char> payload(count * 4);
  const float* in = values.data();
  for (size_t i = 0; i < count; ++i) {
    EncodeU32(std::bit_cast<uint32_t>(in[i]), payload.data() + 4 * i);
  }
  out.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size()));
  if (!out) throw Error("failed writing feature file: " + path.string());
}

}  // namespace vsumm
