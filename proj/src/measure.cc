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

#include "vsumm/measure.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "vsumm/error.h"
#include "vsumm/gtgen.h"

namespace vsumm {

int MeasureParams::BetaSnippets(double snippet_seconds) const {
  if (!(snippet_seconds > 0.0)) throw Error("snippet_seconds must be > 0");
  return std::max(1, static_cast<int>(std::lround(beta_sec / snippet_seconds)));
}

void MeasureParams::Validate() const {
  if (!(alpha > 0.0) || !(beta_sec > 0.0) || !(penalty > 0.0)) {
    throw Error("measure parameters alpha, beta and penalty must be > 0");
  }
}

ScoreFunction::ScoreFunction(const AnnotatedVideo& video,
                             const MeasureParams& params)
    : ScoreFunction(RasterizeSegments(video),
                    params.BetaSnippets(video.snippet_seconds), params) {}

ScoreFunction::ScoreFunction(std::vector<RatedSpan> spans, int beta_snippets,
                             const MeasureParams& params)
    : spans_(std::move(spans)), beta_(beta_snippets), params_(params) {
  params_.Validate();
  if (beta_ < 1) throw Error("beta must cover at least one snippet");
  int next = 0;
  for (size_t s = 0; s < spans_.size(); ++s) {
    const RatedSpan& span = spans_[s];
    if (span.begin != next || span.end <= span.begin) {
      throw Error("rated spans must partition the snippet range");
    }
    next = span.end;
    for (int i = span.begin; i < span.end; ++i) {
      span_of_.push_back(static_cast<int>(s));
    }
    if (span.rating < 0) {
      classes_.push_back(SegmentClass::kNegative);
    } else if (span.repetitive) {
      classes_.push_back(SegmentClass::kRepetitive);
    } else {
      classes_.push_back(SegmentClass::kPositive);
    }
    reward_.push_back(std::exp(params_.alpha * span.rating));
  }
}

int ScoreFunction::effective_length(int span) const {
  const int len = spans_[span].length();
  return classes_[span] == SegmentClass::kRepetitive ? std::min(len, beta_)
                                                     : len;
}

double ScoreFunction::SpanValue(int span, int count) const {
  if (count == 0) return 0.0;
  const double t = count;
  switch (classes_[span]) {
    case SegmentClass::kPositive:
      return t * (1.0 + t / spans_[span].length()) * reward_[span];
    case SegmentClass::kRepetitive: {
      const double m = std::min(count, beta_);
      const double c = std::min(spans_[span].length(), beta_);
      return m * (1.0 + m / c) * reward_[span];
    }
    case SegmentClass::kNegative:
      return -t * params_.penalty;
  }
  return 0.0;
}

std::vector<int> ScoreFunction::Counts(std::span<const int> snippets) const {
  std::vector<int> counts(spans_.size(), 0);
  std::vector<char> seen(span_of_.size(), 0);
  for (int i : snippets) {
    if (i < 0 || i >= n_snippets()) {
      throw Error("snippet index " + std::to_string(i) + " out of range");
    }
    if (seen[i]) throw Error("duplicate snippet index " + std::to_string(i));
    seen[i] = 1;
    ++counts[span_of_[i]];
  }
  return counts;
}

double ScoreFunction::Score(std::span<const int> snippets) const {
  const std::vector<int> counts = Counts(snippets);
  double total = 0.0;
  for (size_t s = 0; s < counts.size(); ++s) {
    total += SpanValue(static_cast<int>(s), counts[s]);
  }
  return total;
}

ScoreDecomposition ScoreFunction::Decompose(
    std::span<const int> snippets) const {
  const std::vector<int> counts = Counts(snippets);
  ScoreDecomposition d;
  for (size_t s = 0; s < counts.size(); ++s) {
    const double t = counts[s];
    if (counts[s] == 0) continue;
    switch (classes_[s]) {
      case SegmentClass::kPositive:
        d.supermodular += t * (1.0 + t / spans_[s].length()) * reward_[s];
        break;
      case SegmentClass::kRepetitive: {
        const double b = beta_;
        const double c = std::min(spans_[s].length(), beta_);
        d.submodular +=
            reward_[s] * (std::min(t, b) - std::max(t * t - b * b, 0.0) / c);
        d.supermodular += reward_[s] * t * t / c;
        break;
      }
      case SegmentClass::kNegative:
        d.submodular -= t * params_.penalty;
        break;
    }
  }
  return d;
}

ScoreState::ScoreState(const ScoreFunction& score)
    : score_(&score), counts_(score.spans().size(), 0) {}

void ScoreState::Reset() {
  std::fill(counts_.begin(), counts_.end(), 0);
  value_ = 0.0;
}

double ScoreState::Gain(int snippet) const {
  const int s = score_->span_of(snippet);
  return score_->SpanValue(s, counts_[s] + 1) -
         score_->SpanValue(s, counts_[s]);
}

void ScoreState::Add(int snippet) {
  value_ += Gain(snippet);
  ++counts_[score_->span_of(snippet)];
}

ScoreBounds ComputeScoreBounds(const ScoreFunction& score, int budget) {
  if (budget < 1 || budget > score.n_snippets()) {
    throw Error(
        "budget " + std::to_string(budget) +
        " outside [1, n_snippets=" + std::to_string(score.n_snippets()) + "]");
  }
  ScoreBounds b;
  b.s_min = -score.params().penalty * budget;
  b.s_max = score.Score(GroundTruthSummary(score, budget));
  return b;
}

double NormalizedScore(double score, const ScoreBounds& bounds) {
  const double range = bounds.s_max - bounds.s_min;
  if (!(range > 0.0)) return score >= bounds.s_max ? 1.0 : 0.0;
  return std::clamp((score - bounds.s_min) / range, 0.0, 1.0);
}

double MarginLoss(double score, const ScoreBounds& bounds) {
  return 1.0 - NormalizedScore(score, bounds);
}

}  // namespace vsumm
