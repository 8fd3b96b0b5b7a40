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

#include "vsumm/gtgen.h"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "vsumm/error.h"
#include "vsumm/random.h"

namespace vsumm {
namespace {

// A span after repetitive trimming: snippets [begin, begin + length).
struct Piece {
  int begin = 0;
  int length = 0;
};

// How the rating classes play out for one budget.
struct ClassPlan {
  std::vector<int> base;           // snippets of classes taken whole
  std::vector<Piece> split_class;  // pieces of the class that must be split
  int remaining = 0;               // budget left for split_class
};

ClassPlan PlanClasses(const ScoreFunction& score, int budget) {
  ClassPlan plan;
  int remaining = budget;
  for (int rating = kMaxRating; rating >= 0; --rating) {
    std::vector<Piece> pieces;
    int total = 0;
    for (size_t s = 0; s < score.spans().size(); ++s) {
      if (score.spans()[s].rating != rating) continue;
      Piece p{score.spans()[s].begin,
              score.effective_length(static_cast<int>(s))};
      total += p.length;
      pieces.push_back(p);
    }
    if (pieces.empty()) continue;
    if (total <= remaining) {
      for (const Piece& p : pieces) {
        for (int i = 0; i < p.length; ++i) plan.base.push_back(p.begin + i);
      }
      remaining -= total;
      if (remaining == 0) break;
      continue;
    }
    plan.split_class = std::move(pieces);
    plan.remaining = remaining;
    break;
  }
  return plan;
}

// reach[s] == true iff some subset of `lengths` (skipping index `skip`)
// sums to exactly s, for s in [0, target].
std::vector<char> SubsetSums(const std::vector<int>& lengths, int target,
                             int skip) {
  std::vector<char> reach(target + 1, 0);
  reach[0] = 1;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    for (int s = target; s >= lengths[i]; --s) {
      if (reach[s - lengths[i]]) reach[s] = 1;
    }
  }
  return reach;
}

// A way to fill the remaining budget: spans taken whole sum to
// remaining - prefix, plus `prefix` leading snippets of span `broken`.
struct SplitCandidate {
  int broken = -1;
  int prefix = 0;
};

std::vector<SplitCandidate> BestSplits(const std::vector<int>& lengths,
                                       int remaining) {
  if (SubsetSums(lengths, remaining, -1)[remaining]) {
    return {SplitCandidate{}};
  }
  // Minimize t (L - t) / L, compared as exact rationals.
  std::vector<SplitCandidate> best;
  int64_t best_num = -1;
  int64_t best_den = 1;
  for (size_t p = 0; p < lengths.size(); ++p) {
    const std::vector<char> reach =
        SubsetSums(lengths, remaining, static_cast<int>(p));
    const int len = lengths[p];
    for (int t = 1; t < len && t <= remaining; ++t) {
      if (!reach[remaining - t]) continue;
      const int64_t num = static_cast<int64_t>(t) * (len - t);
      const int64_t den = len;
      if (best_num < 0 || num * best_den < best_num * den) {
        best.clear();
        best_num = num;
        best_den = den;
      }
      if (num * best_den == best_num * den) {
        best.push_back({static_cast<int>(p), t});
      }
    }
  }
  if (best.empty()) throw Error("ground-truth split search found no filling");
  return best;
}

// Random subset of `lengths` (excluding `skip`) summing to `target`.
std::vector<int> RandomSubsetWithSum(const std::vector<int>& lengths,
                                     int target, int skip, Rng& rng) {
  std::vector<int> order;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (static_cast<int>(i) != skip) order.push_back(static_cast<int>(i));
  }
  Shuffle(order, rng);
  const size_t m = order.size();
  // suffix[i][s]: items order[i..] can make sum s.
  std::vector<std::vector<char>> suffix(m + 1,
                                        std::vector<char>(target + 1, 0));
  suffix[m][0] = 1;
  for (size_t i = m; i-- > 0;) {
    const int len = lengths[order[i]];
    for (int s = 0; s <= target; ++s) {
      suffix[i][s] = suffix[i + 1][s] || (s >= len && suffix[i + 1][s - len]);
    }
  }
  std::vector<int> chosen;
  int left = target;
  for (size_t i = 0; i < m; ++i) {
    const int len = lengths[order[i]];
    const bool can_take = len <= left && suffix[i + 1][left - len];
    const bool can_skip = suffix[i + 1][left];
    bool take = can_take;
    if (can_take && can_skip) take = UniformIndex(rng, 2) == 1;
    if (take) {
      chosen.push_back(order[i]);
      left -= len;
    }
  }
  return chosen;
}

}  // namespace

GroundTruthPool GenerateGroundTruth(const ScoreFunction& score, int budget,
                                    int max_gt, uint64_t seed,
                                    std::string video_id) {
  if (budget < 1) throw Error("ground-truth budget must be >= 1");
  if (budget > score.n_snippets()) {
    throw Error("ground-truth budget " + std::to_string(budget) +
                " exceeds n_snippets " + std::to_string(score.n_snippets()));
  }
  if (max_gt < 1) throw Error("max_gt must be >= 1");

  GroundTruthPool pool;
  pool.video_id = std::move(video_id);
  pool.budget_snippets = budget;
  pool.seed = seed;

  ClassPlan plan = PlanClasses(score, budget);
  if (plan.split_class.empty()) {
    std::sort(plan.base.begin(), plan.base.end());
    pool.summaries.push_back(std::move(plan.base));
    return pool;
  }

  std::vector<int> lengths;
  for (const Piece& p : plan.split_class) lengths.push_back(p.length);
  const std::vector<SplitCandidate> candidates =
      BestSplits(lengths, plan.remaining);

  Rng rng(seed);
  std::set<std::vector<int>> seen;
  const int attempts = 8 * max_gt + 32;
  for (int a = 0;
       a < attempts && static_cast<int>(pool.summaries.size()) < max_gt; ++a) {
    const SplitCandidate& c = candidates[UniformIndex(rng, candidates.size())];
    const std::vector<int> whole =
        RandomSubsetWithSum(lengths, plan.remaining - c.prefix, c.broken, rng);

    std::vector<int> summary = plan.base;
    for (int idx : whole) {
      const Piece& p = plan.split_class[idx];
      for (int i = 0; i < p.length; ++i) summary.push_back(p.begin + i);
    }
    if (c.broken >= 0) {
      const Piece& p = plan.split_class[c.broken];
      for (int i = 0; i < c.prefix; ++i) summary.push_back(p.begin + i);
    }
    std::sort(summary.begin(), summary.end());
    if (seen.insert(summary).second) {
      pool.summaries.push_back(std::move(summary));
    }
  }
  return pool;
}

GroundTruthPool GenerateGroundTruth(const AnnotatedVideo& video, int budget,
                                    const MeasureParams& params, int max_gt,
                                    uint64_t seed) {
  return GenerateGroundTruth(ScoreFunction(video, params), budget, max_gt, seed,
                             video.id);
}

std::vector<int> GroundTruthSummary(const ScoreFunction& score, int budget) {
  return GenerateGroundTruth(score, budget, 1, 0).summaries.front();
}

RandomSummaryMode ParseRandomSummaryMode(const std::string& name) {
  if (name == "uniform-random") return RandomSummaryMode::kUniformRandom;
  if (name == "positive-only") return RandomSummaryMode::kPositiveOnly;
  if (name == "uniform-spaced") return RandomSummaryMode::kUniformSpaced;
  throw Error("unknown random summary mode: " + name);
}

std::vector<int> SampleRandomSummary(const ScoreFunction& score, int budget,
                                     RandomSummaryMode mode, uint64_t seed) {
  const int n = score.n_snippets();
  if (budget < 1 || budget > n) {
    throw Error("random summary budget " + std::to_string(budget) +
                " outside [1, " + std::to_string(n) + "]");
  }
  std::vector<int> out;
  switch (mode) {
    case RandomSummaryMode::kUniformRandom: {
      Rng rng(seed);
      out = SampleWithoutReplacement(rng, n, budget);
      break;
    }
    case RandomSummaryMode::kPositiveOnly: {
      std::vector<int> eligible;
      for (int i = 0; i < n; ++i) {
        if (score.span_class(score.span_of(i)) != SegmentClass::kNegative) {
          eligible.push_back(i);
        }
      }
      if (static_cast<int>(eligible.size()) < budget) {
        throw Error("positive-only summary needs " + std::to_string(budget) +
                    " non-negative snippets, video has " +
                    std::to_string(eligible.size()));
      }
      Rng rng(seed);
      for (int idx : SampleWithoutReplacement(
               rng, static_cast<int>(eligible.size()), budget)) {
        out.push_back(eligible[idx]);
      }
      break;
    }
    case RandomSummaryMode::kUniformSpaced: {
      const int step = n / budget;
      for (int i = 0; i < budget; ++i) out.push_back(i * step);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SaveGroundTruthPool(const std::filesystem::path& path,
                         const GroundTruthPool& pool, double score) {
  nlohmann::json doc{{"video_id", pool.video_id},
                     {"budget_snippets", pool.budget_snippets},
                     {"seed", pool.seed},
                     {"score", score},
                     {"summaries", pool.summaries}};
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write pool file: " + path.string());
  out << doc.dump(2) << "\n";
}

GroundTruthPool LoadGroundTruthPool(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pool file: " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    GroundTruthPool pool;
    pool.video_id = doc.at("video_id").get<std::string>();
    pool.budget_snippets = doc.at("budget_snippets").get<int>();
    pool.seed = doc.value("seed", uint64_t{0});
    pool.summaries = doc.at("summaries").get<std::vector<std::vector<int>>>();
    return pool;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed pool file " + path.string() + ": " + e.what());
  }
}

}  // namespace vsumm
