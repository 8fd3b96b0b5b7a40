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

#include "vsumm/synthetic.h"

#include <gtest/gtest.h>

#include <set>

#include "test_util.h"
#include "vsumm/error.h"

namespace vsumm {
namespace {

SyntheticCorpusConfig SmallConfig() {
  SyntheticCorpusConfig config = DefaultSyntheticConfig();
  config.videos_per_domain = 3;
  config.snippets_per_video = 80;
  return config;
}

TEST(SyntheticTest, DefaultShapeAndDeterminism) {
  const SyntheticCorpusConfig config = DefaultSyntheticConfig();
  EXPECT_EQ(config.domains.size(), 3u);
  EXPECT_EQ(config.videos_per_domain, 10);
  EXPECT_EQ(config.snippets_per_video, 300);
  const auto a = GenerateSyntheticCorpus(config);
  const auto b = GenerateSyntheticCorpus(config);
  ASSERT_EQ(a.size(), 30u);
  std::set<std::string> ids;
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(ids.insert(a[i].id).second);
    EXPECT_EQ(a[i].n_snippets, 300);
    EXPECT_NO_THROW(ValidateVideo(a[i]));
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].shots, b[i].shots);
    ASSERT_EQ(a[i].segments.size(), b[i].segments.size());
    for (const auto& [name, fm] : a[i].features) {
      EXPECT_EQ(fm.values, b[i].features.at(name).values);
    }
  }
  EXPECT_EQ(a[0].id, config.domains[0].name + "_0");
}

TEST(SyntheticTest, FeatureFamilies) {
  const auto videos = GenerateSyntheticCorpus(SmallConfig());
  const AnnotatedVideo& v = videos.front();
  EXPECT_EQ(v.features.at(kSceneFamily).kind, FeatureKind::kDense);
  EXPECT_EQ(v.features.at(kSceneFamily).cols(), 16);
  EXPECT_EQ(v.features.at(kMotionFamily).cols(), 8);
  EXPECT_EQ(v.features.at(kConceptFamily).kind, FeatureKind::kProbability);
  EXPECT_EQ(v.features.at(kCountFamily).kind, FeatureKind::kCount);
  const FeatureValues& p = v.features.at(kConceptFamily).values;
  EXPECT_GE(p.minCoeff(), 0.0f);
  EXPECT_LE(p.maxCoeff(), 1.0f);
}

TEST(SyntheticTest, SeedChangesCorpus) {
  SyntheticCorpusConfig config = SmallConfig();
  const auto a = GenerateSyntheticCorpus(config);
  config.seed += 1;
  const auto b = GenerateSyntheticCorpus(config);
  EXPECT_NE(a[0].features.at(kSceneFamily).values,
            b[0].features.at(kSceneFamily).values);
}

TEST(SyntheticTest, NoRepetitiveWhenProbabilityZero) {
  SyntheticCorpusConfig config = SmallConfig();
  for (auto& d : config.domains) d.repetitive_prob = 0.0;
  for (const auto& v : GenerateSyntheticCorpus(config)) {
    for (const auto& s : v.segments) EXPECT_FALSE(s.repetitive);
  }
}

TEST(SyntheticTest, RatingsSpreadAndRepetitiveNonNegative) {
  const auto videos = GenerateSyntheticCorpus(DefaultSyntheticConfig());
  std::set<int> ratings;
  int repetitive = 0;
  for (const auto& v : videos) {
    for (const auto& s : v.segments) {
      ratings.insert(s.rating);
      if (s.repetitive) {
        ++repetitive;
        EXPECT_GE(s.rating, 0);
      }
    }
  }
  EXPECT_EQ(ratings.size(), 7u);
  EXPECT_GT(repetitive, 0);
}

TEST(SyntheticTest, ConfigFileRoundTrip) {
  const auto dir = testing::ScratchDir("synthetic");
  SyntheticCorpusConfig config = SmallConfig();
  config.domains[1].separation = 0.25;
  config.domains[2].permutation = {6, 5, 4, 3, 2, 1, 0};
  SaveSyntheticConfig(dir / "c.json", config);
  const SyntheticCorpusConfig back = LoadSyntheticConfig(dir / "c.json");
  EXPECT_EQ(back.seed, config.seed);
  EXPECT_EQ(back.videos_per_domain, 3);
  ASSERT_EQ(back.domains.size(), 3u);
  EXPECT_EQ(back.domains[1].separation, 0.25);
  EXPECT_EQ(back.domains[2].permutation, config.domains[2].permutation);
  const auto a = GenerateSyntheticCorpus(config);
  const auto b = GenerateSyntheticCorpus(back);
  EXPECT_EQ(a[4].features.at(kSceneFamily).values,
            b[4].features.at(kSceneFamily).values);
}

TEST(SyntheticTest, ValidationErrors) {
  SyntheticCorpusConfig config = SmallConfig();
  config.domains[0].permutation = {0, 0, 1, 2, 3, 4, 5};
  EXPECT_THROW(GenerateSyntheticCorpus(config), Error);
  config = SmallConfig();
  config.domains[0].repetitive_prob = 1.5;
  EXPECT_THROW(GenerateSyntheticCorpus(config), Error);
  config = SmallConfig();
  config.domains[0].min_segment_snippets = 5;
  config.domains[0].max_segment_snippets = 4;
  EXPECT_THROW(GenerateSyntheticCorpus(config), Error);
  config = SmallConfig();
  config.domains.clear();
  EXPECT_THROW(GenerateSyntheticCorpus(config), Error);
  config = SmallConfig();
  config.domains[1].name = config.domains[0].name;
  EXPECT_THROW(GenerateSyntheticCorpus(config), Error);
  config = SmallConfig();
  config.snippets_per_video = 0;
  EXPECT_THROW(GenerateSyntheticCorpus(config), Error);
}

}  // namespace
}  // namespace vsumm
