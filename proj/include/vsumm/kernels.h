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

// Pairwise structures over snippets that the set-function components read.

#ifndef VSUMM_KERNELS_H_
#define VSUMM_KERNELS_H_

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vsumm/corpus.h"

namespace vsumm {

// Symmetric n x n similarity with entries in [0, 1] and unit diagonal.
struct SimilarityMatrix {
  Eigen::MatrixXd values;
  std::string source;

  int size() const { return static_cast<int>(values.rows()); }
  double operator()(int i, int j) const { return values(i, j); }
};

// sim(i, j) = (1 + cos(x_i, x_j)) / 2. A zero row has similarity 0 to every
// other snippet and 1 to itself. Throws on non-finite features.
SimilarityMatrix BuildSimilarity(const FeatureMatrix& features);
SimilarityMatrix BuildSimilarity(const Eigen::MatrixXd& rows,
                                 std::string source = "");

// d(i, j) = 1 - sim(i, j).
Eigen::MatrixXd DistanceFromSimilarity(const SimilarityMatrix& sim);

enum class ConceptInterpretation { kWeight, kProbability };

// n x |U| concept matrix: per-snippet coverage weights w_xu or coverage
// probabilities p_xu.
struct ConceptMatrix {
  Eigen::MatrixXd values;
  ConceptInterpretation interpretation = ConceptInterpretation::kWeight;
  std::string source;

  int size() const { return static_cast<int>(values.rows()); }
  int concepts() const { return static_cast<int>(values.cols()); }
};

// Probability features are clipped to [0, 1]; count features pass through
// as weights. Dense features are rejected.
ConceptMatrix BuildConceptMatrix(const FeatureMatrix& features);

// shot_of[i] = index of the shot containing snippet i.
std::vector<int> ShotIndex(std::span<const ShotRange> shots, int n_snippets);

// 1 / (1 + |i - j|) for distinct snippets of the same shot, 0 across shots.
double IndexProximityWeight(std::span<const ShotRange> shots, int i, int j);

}  // namespace vsumm

#endif  // VSUMM_KERNELS_H_
