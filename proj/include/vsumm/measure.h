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

// Ratings-based summary score.
//
// With t_i = |y ∩ x_i| counted in snippets, L_i = |x_i|, b the repetitiveness
// cut-off in snippets and reward_i = exp(alpha * rating_i):
//
//   S(y) =   sum_{non-repetitive, rating >= 0}  t_i (1 + t_i / L_i) reward_i
//          + sum_{repetitive,     rating >= 0}  m_i (1 + m_i / c_i) reward_i
//          - sum_{rating < 0}                   t_i * penalty
//
// where m_i = min(t_i, b) and c_i = min(L_i, b). Rating-0 spans (including
// filler) count as positive with reward exp(0) = 1.

#ifndef VSUMM_MEASURE_H_
#define VSUMM_MEASURE_H_

#include <span>
#include <vector>

#include "vsumm/corpus.h"

namespace vsumm {

struct MeasureParams {
  double alpha = 1.0;     // reward scaling
  double beta_sec = 6.0;  // repetitiveness cut-off, seconds
  double penalty = 2.0;   // per-snippet penalty for negative segments

  // round(beta_sec / snippet_seconds), at least 1.
  int BetaSnippets(double snippet_seconds) const;
  void Validate() const;
};

enum class SegmentClass { kPositive, kRepetitive, kNegative };

struct ScoreDecomposition {
  double submodular = 0.0;
  double supermodular = 0.0;
};

class ScoreFunction {
 public:
  ScoreFunction(const AnnotatedVideo& video, const MeasureParams& params);
  ScoreFunction(std::vector<RatedSpan> spans, int beta_snippets,
                const MeasureParams& params);

  double Score(std::span<const int> snippets) const;
  double Score(const Summary& summary) const { return Score(summary.snippets); }

  // Splits S into a part with non-increasing marginal gains and a part with
  // non-decreasing ones; the two parts sum to Score() exactly:
  //   sub = sum_R reward (min(t, b) - max(t^2 - b^2, 0) / c)
  //         - penalty * sum_N t
  //   sup = sum_P t (1 + t / L) reward + sum_R reward t^2 / c
  ScoreDecomposition Decompose(std::span<const int> snippets) const;

  // Contribution of one span when `count` of its snippets are selected.
  double SpanValue(int span, int count) const;

  // Per-span intersection counts; throws on out-of-range or duplicate
  // snippet indices.
  std::vector<int> Counts(std::span<const int> snippets) const;

  const std::vector<RatedSpan>& spans() const { return spans_; }
  int span_of(int snippet) const { return span_of_[snippet]; }
  SegmentClass span_class(int span) const { return classes_[span]; }
  // Span length as it enters the score: min(L, b) for repetitive spans.
  int effective_length(int span) const;
  double reward(int span) const { return reward_[span]; }
  int n_snippets() const { return static_cast<int>(span_of_.size()); }
  int beta_snippets() const { return beta_; }
  const MeasureParams& params() const { return params_; }

 private:
  std::vector<RatedSpan> spans_;
  std::vector<int> span_of_;
  std::vector<SegmentClass> classes_;
  std::vector<double> reward_;
  int beta_;
  MeasureParams params_;
};

// Incremental evaluation of ScoreFunction for greedy selection.
class ScoreState {
 public:
  explicit ScoreState(const ScoreFunction& score);

  void Reset();
  // S(current + snippet) - S(current); snippet must not be selected yet.
  double Gain(int snippet) const;
  void Add(int snippet);
  double value() const { return value_; }

 private:
  const ScoreFunction* score_;
  std::vector<int> counts_;
  double value_ = 0.0;
};

// Min-max normalization range for a (video, budget). s_max is the score of
// a ground-truth summary at this budget; s_min = -penalty * budget bounds
// every summary of at most `budget` snippets from below.
struct ScoreBounds {
  double s_min = 0.0;
  double s_max = 0.0;
};

ScoreBounds ComputeScoreBounds(const ScoreFunction& score, int budget);

// (score - s_min) / (s_max - s_min) clipped to [0, 1]. For a degenerate range
// returns 1 if score reaches s_max and 0 otherwise.
double NormalizedScore(double score, const ScoreBounds& bounds);

// 1 - NormalizedScore. Used both as the training margin and as ScoreLoss.
double MarginLoss(double score, const ScoreBounds& bounds);

}  // namespace vsumm

#endif  // VSUMM_MEASURE_H_
