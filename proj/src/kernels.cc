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

#include "vsumm/kernels.h"

#include <algorithm>
#include <cstdlib>

#include "vsumm/error.h"

namespace vsumm {

SimilarityMatrix BuildSimilarity(const FeatureMatrix& features) {
  return BuildSimilarity(features.values.cast<double>(), features.name);
}

SimilarityMatrix BuildSimilarity(const Eigen::MatrixXd& rows,
                                 std::string source) {
  if (!rows.allFinite()) {
    throw Error("similarity: non-finite feature values in '" + source + "'");
  }
  const int n = static_cast<int>(rows.rows());
  Eigen::MatrixXd unit = rows;
  std::vector<char> zero(n, 0);
  for (int i = 0; i < n; ++i) {
    const double norm = unit.row(i).norm();
    if (norm > 0.0) {
      unit.row(i) /= norm;
    } else {
      zero[i] = 1;
    }
  }
  const Eigen::MatrixXd cosine = unit * unit.transpose();

  SimilarityMatrix sim;
  sim.source = std::move(source);
  sim.values.resize(n, n);
  for (int i = 0; i < n; ++i) {
    sim.values(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      double v = 0.0;
      if (!zero[i] && !zero[j]) {
        v = std::clamp(0.5 * (1.0 + cosine(i, j)), 0.0, 1.0);
      }
      sim.values(i, j) = v;
      sim.values(j, i) = v;
    }
  }
  return sim;
}

Eigen::MatrixXd DistanceFromSimilarity(const SimilarityMatrix& sim) {
  return Eigen::MatrixXd::Ones(sim.size(), sim.size()) - sim.values;
}

ConceptMatrix BuildConceptMatrix(const FeatureMatrix& features) {
  ConceptMatrix out;
  out.source = features.name;
  switch (features.kind) {
    case FeatureKind::kProbability:
      out.interpretation = ConceptInterpretation::kProbability;
      out.values = features.values.cast<double>().cwiseMax(0.0).cwiseMin(1.0);
      break;
    case FeatureKind::kCount:
      out.interpretation = ConceptInterpretation::kWeight;
      out.values = features.values.cast<double>();
      break;
    case FeatureKind::kDense:
      throw Error("concept matrix needs a probability or count feature, '" +
                  features.name + "' is dense");
  }
  if (!out.values.allFinite()) {
    throw Error("concept matrix: non-finite values in '" + features.name + "'");
  }
  return out;
}

std::vector<int> ShotIndex(std::span<const ShotRange> shots, int n_snippets) {
  std::vector<int> shot_of(n_snippets, -1);
  for (size_t s = 0; s < shots.size(); ++s) {
    for (int i = shots[s].begin; i < shots[s].end && i < n_snippets; ++i) {
      shot_of[i] = static_cast<int>(s);
    }
  }
  for (int i = 0; i < n_snippets; ++i) {
    if (shot_of[i] < 0) throw Error("shots do not cover every snippet");
  }
  return shot_of;
}

double IndexProximityWeight(std::span<const ShotRange> shots, int i, int j) {
  if (i == j) return 0.0;
  for (const ShotRange& s : shots) {
    const bool has_i = i >= s.begin && i < s.end;
    const bool has_j = j >= s.begin && j < s.end;
    if (has_i || has_j) {
      return has_i && has_j ? 1.0 / (1.0 + std::abs(i - j)) : 0.0;
    }
  }
  return 0.0;
}

}  // namespace vsumm
