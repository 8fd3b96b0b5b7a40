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

// Seeded randomness with portable draws. The std:: distributions are
// implementation-defined, so every sampler used by the library goes through
// these helpers to keep results identical across standard libraries.

#ifndef VSUMM_RANDOM_H_
#define VSUMM_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace vsumm {

using Rng = std::mt19937_64;

// splitmix64 finalizer; derives independent child seeds from a parent seed.
uint64_t MixSeed(uint64_t seed, uint64_t salt);

// Uniform integer in [0, n). n must be positive.
uint64_t UniformIndex(Rng& rng, uint64_t n);

// Uniform double in [0, 1) with 53 random bits.
double UniformUnit(Rng& rng);

// Standard normal draw (Box-Muller, no cached second value).
double StandardNormal(Rng& rng);

template <typename T>
void Shuffle(std::vector<T>& values, Rng& rng) {
  for (size_t i = values.size(); i > 1; --i) {
    const size_t j = UniformIndex(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

// `count` distinct values from [0, n) in random order (partial Fisher-Yates).
std::vector<int> SampleWithoutReplacement(Rng& rng, int n, int count);

}  // namespace vsumm

#endif  // VSUMM_RANDOM_H_
