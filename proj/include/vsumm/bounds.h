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

// Empirical checks of the approximation guarantees on random small
// instances, with exhaustive search as the reference optimum.
//
// Instance families per case:
//   1  non-negative mix of monotone submodular kinds, greedy
//   2  disparity-min over planar points, dispersion greedy
//   3  graph cut with lambda 0.8, randomized greedy averaged over seeds
//   4  case-1 mix plus disparity-min, best of two
//   5  graph cut 0.8 plus disparity-min, best of two averaged over seeds
//   6  case-1 mix plus (positive modular + continuity), greedy vs the
//      curvature factor
//   7  case 6 plus disparity-min, best of two vs half the curvature factor
//   8  graph cut 0.8 plus continuity; greedy runs, nothing is checked
//
// Cases with a dispersion term compare against the best set of exactly k
// elements; the others against the best set of at most k (exactly k for
// monotone objectives).

#ifndef VSUMM_BOUNDS_H_
#define VSUMM_BOUNDS_H_

#include <cstdint>
#include <string>

namespace vsumm {

struct BoundCheckOptions {
  int case_id = 1;
  int n = 12;
  int k = 4;
  int trials = 200;
  int random_seeds = 50;  // cases 3 and 5
  uint64_t seed = 0;
};

struct BoundCheckReport {
  int case_id = 0;
  int n = 0;
  int k = 0;
  int trials = 0;
  int evaluated = 0;  // trials with a positive optimum and defined factor
  int skipped = 0;
  int violations = 0;
  bool checked = true;  // false for case 8
  double min_factor = 0.0;
  double mean_factor = 0.0;
  double min_ratio = 0.0;  // algorithm value / optimum
  double mean_ratio = 0.0;
  double min_slack = 0.0;  // min over trials of ratio - factor
  // Case 6/7: mean of the factor written with a positive exponent, which is
  // negative and therefore vacuous.
  double mean_positive_exponent_factor = 0.0;
  std::string algorithm;
  std::string guarantee;
  std::string tag;
  std::string note;
};

BoundCheckReport VerifyBounds(const BoundCheckOptions& options);

// One-line human-readable summary.
std::string FormatBoundReport(const BoundCheckReport& report);

}  // namespace vsumm

#endif  // VSUMM_BOUNDS_H_
