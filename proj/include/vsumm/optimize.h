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

// Cardinality-constrained maximization of set functions.
//
// Every routine breaks ties toward the lowest snippet index. Routines that
// take a SetFunction& reset it first and leave it holding the returned
// selection.

#ifndef VSUMM_OPTIMIZE_H_
#define VSUMM_OPTIMIZE_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vsumm/functions.h"

namespace vsumm {

struct GreedyOptions {
  // Lazy evaluation is only sound for submodular objectives; for other
  // classes the naive scan runs instead (GreedyResult::lazy_used says which).
  bool lazy = true;
  // Keep adding until |X| = k even when the best gain is not positive.
  // Monotone objectives always fill the budget.
  bool fill_budget = false;
};

struct GreedyResult {
  std::vector<int> selected;  // in insertion order
  double value = 0.0;
  int64_t gain_evaluations = 0;
  bool lazy_used = false;
};

// Greedy with stale-bound priority queue (lazy) or full rescans (naive).
// Both return the same set. Throws if k < 1 or k > ground size.
GreedyResult GreedyMax(SetFunction& f, int k,
                       const GreedyOptions& options = {});

// At each of k steps picks uniformly among the k remaining elements of
// largest gain. With `dummies`, the candidate list is padded with zero-gain
// placeholders that stand for "add nothing", which replaces elements of
// negative gain.
GreedyResult RandomizedGreedyMax(SetFunction& f, int k, uint64_t seed,
                                 bool dummies = false);

// Farthest pair first, then repeatedly the element farthest from the
// current selection. `value` is the minimum pairwise distance. Throws if
// k < 2 or k > n.
GreedyResult DispersionGreedyMax(const Eigen::MatrixXd& dist, int k);

struct BestOfTwoResult {
  std::vector<int> selected;
  double value = 0.0;         // full objective at `selected`
  double first_value = 0.0;   // full objective at the non-dispersion solution
  double second_value = 0.0;  // full objective at the dispersion solution
  bool chose_dispersion = false;
};

// Splits `f` into its dispersion terms and the rest, maximizes each part
// alone (greedy, or randomized greedy when the rest is non-monotone
// submodular; dispersion greedy for the dispersion part) and keeps the
// solution that scores higher on the full objective. The dispersion terms
// must share one distance matrix. Throws if the rest mixes non-monotone
// submodular and supermodular terms.
BestOfTwoResult BestOfTwo(MixtureFunction& f, int k, uint64_t seed);

struct BruteForceResult {
  std::vector<int> selected;
  double value = 0.0;
};

inline constexpr int kBruteForceMaxGround = 22;
inline constexpr int kBruteForceMaxK = 6;

// Exact maximum over subsets of size <= k, or exactly k when `exact_size`.
// Throws when n > 22 or k > 6.
BruteForceResult BruteForceOpt(const SetFunction& f, int k, bool exact_size);
// exact_size = f.is_monotone().
BruteForceResult BruteForceOpt(const SetFunction& f, int k);

struct Curvature {
  double kappa = 0.0;
  bool defined = true;
  std::string note;
};

// 1 - min_j f(j | V - j) / f(j) for a monotone submodular f. Undefined when
// some singleton value is 0.
Curvature SubmodularCurvature(SetFunction& f);

// 1 - min_j l(j) / l(j | V - j) for a monotone supermodular l. Elements with
// l(j | V - j) = 0 contribute ratio 1.
Curvature SupermodularCurvature(SetFunction& l);

// (1 - exp(-(1 - kappa_l) kappa_k)) / kappa_k, with limit 1 - kappa_l as
// kappa_k -> 0.
double CurvatureFactor(double kappa_k, double kappa_l);
// The same expression with a positive exponent, as the guarantee is
// sometimes printed; reported next to the corrected factor for comparison.
double CurvatureFactorPositiveExponent(double kappa_k, double kappa_l);

// Weights grouped by component class and the guarantee that applies.
struct GuaranteeCase {
  int case_id = 1;     // 1..8
  double alpha = 0.0;  // monotone submodular (and non-negative modular)
  double beta = 0.0;   // non-monotone submodular
  double gamma = 0.0;  // supermodular
  double delta = 0.0;  // dispersion
  std::string description;
};

GuaranteeCase ClassifyGuarantee(const MixtureFunction& f);

inline constexpr char kNoGuaranteeTag[] = "heuristic, no guarantee";

}  // namespace vsumm

#endif  // VSUMM_OPTIMIZE_H_
