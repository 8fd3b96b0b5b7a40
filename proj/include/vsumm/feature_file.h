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

// Binary feature matrix files.
//
// Layout (all fields little-endian):
//   bytes 0..3    magic "DSVS"
//   u32           version (1)
//   u32           rows
//   u32           cols
//   rows*cols f32 values, row-major

#ifndef VSUMM_FEATURE_FILE_H_
#define VSUMM_FEATURE_FILE_H_

#include <cstdint>
#include <filesystem>

#include "vsumm/corpus.h"

namespace vsumm {

inline constexpr char kFeatureMagic[4] = {'D', 'S', 'V', 'S'};
inline constexpr uint32_t kFeatureVersion = 1;

FeatureValues ReadFeatureFile(const std::filesystem::path& path);
void WriteFeatureFile(const std::filesystem::path& path,
                      const FeatureValues& values);

}  // namespace vsumm

#endif  // VSUMM_FEATURE_FILE_H_
