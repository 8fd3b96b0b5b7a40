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

// Synthetic rated videos with features that carry the ratings.
//
// Every rating r in [-3, 3] owns one of seven shared cluster prototypes per
// feature family; a domain picks which prototype each rating uses through a
// permutation, so two domains with different permutations disagree on what
// a high-rated snippet looks like. A snippet's dense features are
//
//   separation * prototype[perm[r]] + segment offset + snippet noise,
//
// where the segment offset is shared by all snippets of one segment and
// snippets of repetitive segments get almost no noise (they look alike).

#ifndef VSUMM_SYNTHETIC_H_
#define VSUMM_SYNTHETIC_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vsumm/corpus.h"

namespace vsumm {

inline constexpr char kSceneFamily[] = "scene_features";
inline constexpr char kMotionFamily[] = "motion_features";
inline constexpr char kConceptFamily[] = "object_concepts";
inline constexpr char kCountFamily[] = "object_counts";

inline constexpr int kRatingLevels = kMaxRating - kMinRating + 1;

struct SyntheticDomainSpec {
  std::string name;
  std::vector<std::string> concept_vocabulary;
  // permutation[r - kMinRating] = prototype used by rating r.
  std::array<int, kRatingLevels> permutation{0, 1, 2, 3, 4, 5, 6};
  double separation = 1.0;  // 0 makes features independent of ratings
  int min_segment_snippets = 3;
  int max_segment_snippets = 12;
  double repetitive_prob = 0.15;
  double negative_prob = 0.15;
  double gap_prob = 0.15;
  // Relative frequency of ratings 0..3 for non-negative segments and of
  // ratings -1..-3 for negative ones.
  std::array<double, 4> positive_weights{0.4, 0.3, 0.2, 0.1};
  std::array<double, 3> negative_weights{0.5, 0.3, 0.2};
  uint64_t seed = 0;  // mixed into the corpus seed

  void Validate() const;
};

struct SyntheticCorpusConfig {
  uint64_t seed = 0;
  int videos_per_domain = 10;
  int snippets_per_video = 300;
  double snippet_seconds = 2.0;
  int scene_dim = 16;
  int motion_dim = 8;
  int count_dim = 6;
  double segment_jitter = 0.5;
  double snippet_noise = 0.8;
  double repetitive_noise_factor = 0.05;
  double motion_separation_factor = 0.5;
  std::vector<SyntheticDomainSpec> domains;

  void Validate() const;
};

// Three domains with distinct permutations and the default parameters.
SyntheticCorpusConfig DefaultSyntheticConfig();

SyntheticCorpusConfig LoadSyntheticConfig(const std::filesystem::path& path);
void SaveSyntheticConfig(const std::filesystem::path& path,
                         const SyntheticCorpusConfig& config);

// Deterministic in the config. Video ids are "<domain>_<index>".
std::vector<AnnotatedVideo> GenerateSyntheticCorpus(
    const SyntheticCorpusConfig& config);

}  // namespace vsumm

#endif  // VSUMM_SYNTHETIC_H_
