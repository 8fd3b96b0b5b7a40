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

// Random component instances and exhaustive lattice checks shared by the
// function tests and the acceptance suite.

#ifndef VSUMM_TESTS_PROPERTY_UTIL_H_
#define VSUMM_TESTS_PROPERTY_UTIL_H_

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "test_util.h"
#include "vsumm/functions.h"
#include "vsumm/random.h"

namespace vsumm::testing {

inline std::vector<ShotRange> RandomShots(Rng& rng, int n) {
  std::vector<ShotRange> shots;
  int pos = 0;
  while (pos < n) {
    const int end =
        std::min(n, pos + 1 + static_cast<int>(UniformIndex(rng, 6)));
    shots.push_back({pos, end});
    pos = end;
  }
  return shots;
}

// A random instance of a non-modular component over n elements. Concept
// weights stay below 1 so that set cover saturates only after several picks.
inline std::unique_ptr<SetFunction> RandomComponent(ComponentKind kind,
                                                    Rng& rng, int n) {
  const int concepts = 1 + static_cast<int>(UniformIndex(rng, 5));
  switch (kind) {
    case ComponentKind::kSetCover: {
      Eigen::MatrixXd w = 0.7 * RandomUnitMatrix(rng, n, concepts);
      return std::make_unique<SetCoverFunction>(
          ConceptsFrom(w, ConceptInterpretation::kWeight));
    }
    case ComponentKind::kProbSetCover:
      return std::make_unique<ProbabilisticSetCoverFunction>(
          ConceptsFrom(RandomUnitMatrix(rng, n, concepts),
                       ConceptInterpretation::kProbability));
    case ComponentKind::kFacilityLocation:
      return std::make_unique<FacilityLocationFunction>(
          RandomSimilarity(rng, n));
    case ComponentKind::kSaturatedCoverage:
      return std::make_unique<SaturatedCoverageFunction>(
          RandomSimilarity(rng, n), 0.05 + 0.95 * UniformUnit(rng));
    case ComponentKind::kGraphCut:
      return std::make_unique<GraphCutFunction>(RandomSimilarity(rng, n),
                                                1.5 * UniformUnit(rng));
    case ComponentKind::kDisparityMin: {
      const auto sim = RandomSimilarity(rng, n);
      return std::make_unique<DisparityMinFunction>(
          std::make_shared<Eigen::MatrixXd>(DistanceFromSimilarity(*sim)));
    }
    case ComponentKind::kContinuity:
      return std::make_unique<ContinuityFunction>(RandomShots(rng, n), n);
    case ComponentKind::kModular: {
      Eigen::VectorXd scores(n);
      for (int i = 0; i < n; ++i) scores[i] = StandardNormal(rng);
      return std::make_unique<ModularFunction>(scores);
    }
  }
  return nullptr;
}

inline const std::vector<ComponentKind>& SubmodularKinds() {
  static const std::vector<ComponentKind> kinds = {
      ComponentKind::kSetCover, ComponentKind::kProbSetCover,
      ComponentKind::kFacilityLocation, ComponentKind::kSaturatedCoverage,
      ComponentKind::kGraphCut};
  return kinds;
}

inline std::vector<int> MaskToSet(uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

// f on every subset of the ground set, indexed by bit mask.
inline std::vector<double> SubsetTable(const SetFunction& f) {
  const int n = f.ground_size();
  std::vector<double> table(size_t{1} << n);
  for (uint32_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.Evaluate(MaskToSet(mask, n));
  }
  return table;
}

// Counts (A, b, e) with b, e outside A where the gain of e shrinks (sign +1)
// or grows (sign -1) by more than the tolerance once b is added. Checking
// every such triple covers every nested pair A ⊂ B.
inline int LatticeViolations(const std::vector<double>& table, int n,
                             double sign, double rel_tol = 1e-9) {
  int violations = 0;
  for (uint32_t a = 0; a < table.size(); ++a) {
    for (int b = 0; b < n; ++b) {
      if (a & (1u << b)) continue;
      for (int e = b + 1; e < n; ++e) {
        if (a & (1u << e)) continue;
        const double small = table[a | (1u << e)] - table[a];
        const double large =
            table[a | (1u << b) | (1u << e)] - table[a | (1u << b)];
        const double scale =
            std::max({1.0, std::abs(table[a]),
                      std::abs(table[a | (1u << b) | (1u << e)])});
        if (sign * (small - large) < -rel_tol * scale) ++violations;
      }
    }
  }
  return violations;
}

inline int MonotoneViolations(const std::vector<double>& table, int n,
                              double rel_tol = 1e-9) {
  int violations = 0;
  for (uint32_t a = 0; a < table.size(); ++a) {
    for (int e = 0; e < n; ++e) {
      if (a & (1u << e)) continue;
      const double scale = std::max(1.0, std::abs(table[a]));
      if (table[a | (1u << e)] < table[a] - rel_tol * scale) ++violations;
    }
  }
  return violations;
}

// Walks random selection orders and compares every incremental gain with a
// difference of two evaluations. Returns the number of mismatches out of
// `draws` comparisons.
inline int GainMismatches(SetFunction& f, Rng& rng, int draws,
                          double rel_tol = 1e-9) {
  const int n = f.ground_size();
  int mismatches = 0;
  int done = 0;
  while (done < draws) {
    f.Reset();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    Shuffle(order, rng);
    const int stop = static_cast<int>(UniformIndex(rng, n));
    std::vector<int> chosen;
    for (int step = 0; step < stop; ++step) {
      chosen.push_back(order[step]);
      f.Add(order[step]);
    }
    const double base = f.Evaluate(chosen);
    if (!RelNear(f.value(), base, rel_tol)) ++mismatches;
    for (int step = stop; step < n && done < draws; ++step, ++done) {
      const int e = order[step];
      std::vector<int> with = chosen;
      with.push_back(e);
      if (!RelNear(f.Gain(e), f.Evaluate(with) - base, rel_tol)) ++mismatches;
    }
  }
  f.Reset();
  return mismatches;
}

}  // namespace vsumm::testing

#endif  // VSUMM_TESTS_PROPERTY_UTIL_H_
