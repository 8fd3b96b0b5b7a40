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

// Ground-truth summaries from segment ratings, and random baseline summaries.

#ifndef VSUMM_GTGEN_H_
#define VSUMM_GTGEN_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vsumm/corpus.h"
#include "vsumm/measure.h"

namespace vsumm {

inline constexpr int kDefaultMaxGroundTruths = 500;

struct GroundTruthPool {
  std::string video_id;
  int budget_snippets = 0;
  uint64_t seed = 0;
  // Sorted snippet lists; the first entry is the pool's "fixed" summary.
  std::vector<std::vector<int>> summaries;
};

// Builds up to `max_gt` distinct maximal-score summaries of `budget`
// snippets.
//
// Repetitive spans are trimmed to their first b snippets. Rating classes are
// taken from 3 down to 0; a class that fits in the remaining budget is taken
// whole. The first class that does not fit is split: some of its spans are
// taken whole and at most one more contributes a prefix, so the budget is
// filled exactly. Among such splits only those with the best score are
// produced (a split's score loss depends on the prefix length t of the broken
// span of length L as t (L - t) / L). Negative spans are never used. When
// every non-negative snippet fits, the pool holds that one summary, which is
// then shorter than the budget.
GroundTruthPool GenerateGroundTruth(const ScoreFunction& score, int budget,
                                    int max_gt, uint64_t seed,
                                    std::string video_id = "");

GroundTruthPool GenerateGroundTruth(const AnnotatedVideo& video, int budget,
                                    const MeasureParams& params, int max_gt,
                                    uint64_t seed);

// One deterministic member of the pool (seed 0).
std::vector<int> GroundTruthSummary(const ScoreFunction& score, int budget);

enum class RandomSummaryMode { kUniformRandom, kPositiveOnly, kUniformSpaced };

RandomSummaryMode ParseRandomSummaryMode(const std::string& name);

// uniform-random: `budget` snippets without replacement.
// positive-only: drawn from snippets of non-negative spans only.
// uniform-spaced: every floor(n / budget)-th snippet starting at 0.
std::vector<int> SampleRandomSummary(const ScoreFunction& score, int budget,
                                     RandomSummaryMode mode, uint64_t seed);

void SaveGroundTruthPool(const std::filesystem::path& path,
                         const GroundTruthPool& pool, double score);
GroundTruthPool LoadGroundTruthPool(const std::filesystem::path& path);

}  // namespace vsumm

#endif  // VSUMM_GTGEN_H_
