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

// Fixture builders shared by the unit and acceptance tests.

#ifndef VSUMM_TESTS_TEST_UTIL_H_
#define VSUMM_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vsumm/corpus.h"
#include "vsumm/functions.h"
#include "vsumm/kernels.h"
#include "vsumm/random.h"

namespace vsumm::testing {

inline Segment Seg(double start_sec, double end_sec, int rating,
                   bool repetitive = false) {
  Segment s;
  s.start_sec = start_sec;
  s.end_sec = end_sec;
  s.rating = rating;
  s.repetitive = repetitive;
  return s;
}

// Segment over snippet indices [begin, end) at 2 s per snippet.
inline Segment SnippetSeg(int begin, int end, int rating,
                          bool repetitive = false) {
  return Seg(2.0 * begin, 2.0 * end, rating, repetitive);
}

// A video of n 2-second snippets, one shot, the given segments and a small
// random dense feature so that similarity components can be built.
inline AnnotatedVideo MakeVideo(int n, std::vector<Segment> segments,
                                uint64_t seed = 1) {
  AnnotatedVideo v;
  v.id = "v" + std::to_string(seed);
  v.domain = "test";
  v.snippet_seconds = 2.0;
  v.n_snippets = n;
  v.shots = {{0, n}};
  v.segments = std::move(segments);
  Rng rng(seed);
  FeatureMatrix dense{"dense", FeatureKind::kDense, FeatureValues(n, 3)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 3; ++j) {
      dense.values(i, j) = static_cast<float>(StandardNormal(rng));
    }
  }
  v.features.emplace(dense.name, std::move(dense));
  return v;
}

// Random segments with ratings in [-3, 3], random shots and three feature
// families (dense, probability, count).
inline AnnotatedVideo RandomVideo(Rng& rng, int n, double repetitive_prob = 0.3,
                                  double gap_prob = 0.1) {
  AnnotatedVideo v;
  v.id = "random";
  v.domain = "test";
  v.snippet_seconds = 2.0;
  v.n_snippets = n;
  int pos = 0;
  while (pos < n) {
    const int len = 1 + static_cast<int>(UniformIndex(rng, 6));
    const int end = std::min(n, pos + len);
    if (UniformUnit(rng) >= gap_prob) {
      const int rating = static_cast<int>(UniformIndex(rng, 7)) - 3;
      const bool rep = rating >= 0 && UniformUnit(rng) < repetitive_prob;
      v.segments.push_back(SnippetSeg(pos, end, rating, rep));
    }
    pos = end;
  }
  pos = 0;
  while (pos < n) {
    const int len = 1 + static_cast<int>(UniformIndex(rng, 8));
    const int end = std::min(n, pos + len);
    v.shots.push_back({pos, end});
    pos = end;
  }
  FeatureMatrix dense{"dense", FeatureKind::kDense, FeatureValues(n, 4)};
  FeatureMatrix probs{"probs", FeatureKind::kProbability, FeatureValues(n, 3)};
  FeatureMatrix counts{"counts", FeatureKind::kCount, FeatureValues(n, 2)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 4; ++j) {
      dense.values(i, j) = static_cast<float>(StandardNormal(rng));
    }
    for (int j = 0; j < 3; ++j) {
      probs.values(i, j) = static_cast<float>(UniformUnit(rng));
    }
    for (int j = 0; j < 2; ++j) {
      counts.values(i, j) = static_cast<float>(UniformIndex(rng, 3));
    }
  }
  v.features.emplace(dense.name, std::move(dense));
  v.features.emplace(probs.name, std::move(probs));
  v.features.emplace(counts.name, std::move(counts));
  return v;
}

inline std::shared_ptr<const SimilarityMatrix> SimFrom(Eigen::MatrixXd values) {
  auto sim = std::make_shared<SimilarityMatrix>();
  sim->values = std::move(values);
  return sim;
}

inline std::shared_ptr<const ConceptMatrix> ConceptsFrom(
    Eigen::MatrixXd values, ConceptInterpretation interpretation) {
  auto c = std::make_shared<ConceptMatrix>();
  c->values = std::move(values);
  c->interpretation = interpretation;
  return c;
}

// Similarity from random Gaussian points, as the kernel builds it.
inline std::shared_ptr<const SimilarityMatrix> RandomSimilarity(Rng& rng, int n,
                                                                int dim = 4) {
  Eigen::MatrixXd rows(n, dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dim; ++j) rows(i, j) = StandardNormal(rng);
  }
  return std::make_shared<SimilarityMatrix>(BuildSimilarity(rows));
}

inline Eigen::MatrixXd RandomUnitMatrix(Rng& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = UniformUnit(rng);
  }
  return m;
}

inline bool RelNear(double a, double b, double rel) {
  return std::abs(a - b) <=
         rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("vsumm_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace vsumm::testing

#endif  // VSUMM_TESTS_TEST_UTIL_H_
