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

#include "vsumm/corpus.h"

#include <gtest/gtest.h>

#include <cstring>
#include <fstream>

#include "test_util.h"
#include "vsumm/error.h"
#include "vsumm/feature_file.h"

namespace vsumm {
namespace {

using testing::MakeVideo;
using testing::RandomVideo;
using testing::ScratchDir;
using testing::Seg;

TEST(RasterizeTest, ExactAlignment) {
  AnnotatedVideo v = MakeVideo(5, {Seg(0, 6, 2)});
  const auto spans = RasterizeSegments(v);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0], (RatedSpan{0, 3, 2, false, false}));
  EXPECT_EQ(spans[1], (RatedSpan{3, 5, 0, false, true}));
}

TEST(RasterizeTest, HalfCoveredSnippetGoesToFiller) {
  AnnotatedVideo v = MakeVideo(3, {Seg(0, 3, 2)});
  const auto spans = RasterizeSegments(v);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0], (RatedSpan{0, 1, 2, false, false}));
  EXPECT_EQ(spans[1].begin, 1);
  EXPECT_EQ(spans[1].rating, 0);
  EXPECT_TRUE(spans[1].filler);
}

TEST(RasterizeTest, NoSegmentsIsOneFiller) {
  AnnotatedVideo v = MakeVideo(7, {});
  const auto spans = RasterizeSegments(v);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0], (RatedSpan{0, 7, 0, false, true}));
}

TEST(RasterizeTest, MajorityWins) {
  // Snippet 1 spans [2, 4): 1.5 s from the first segment, 0.5 s from the
  // second.
  AnnotatedVideo v = MakeVideo(3, {Seg(0, 3.5, 1), Seg(3.5, 6, -2)});
  const auto spans = RasterizeSegments(v);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0], (RatedSpan{0, 2, 1, false, false}));
  EXPECT_EQ(spans[1], (RatedSpan{2, 3, -2, false, false}));
}

TEST(RasterizeTest, PartitionProperty) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(UniformIndex(rng, 60));
    AnnotatedVideo v = RandomVideo(rng, n);
    // Jitter boundaries off the snippet grid.
    for (Segment& s : v.segments) {
      s.start_sec += 0.3;
      s.end_sec += 0.3;
    }
    if (!v.segments.empty()) {
      Segment& last = v.segments.back();
      last.end_sec = std::min(last.end_sec, 2.0 * n);
      if (last.end_sec <= last.start_sec) v.segments.pop_back();
    }
    const auto spans = RasterizeSegments(v);
    int covered = 0;
    int expected_begin = 0;
    for (const RatedSpan& s : spans) {
      EXPECT_EQ(s.begin, expected_begin);
      EXPECT_GT(s.end, s.begin);
      covered += s.length();
      expected_begin = s.end;
    }
    EXPECT_EQ(covered, n);
  }
}

TEST(BudgetTest, Examples) {
  EXPECT_EQ(BudgetInSnippets(200, 15), 30);
  EXPECT_EQ(BudgetInSnippets(200, 5), 10);
  EXPECT_EQ(BudgetInSnippets(10, 5), 1);
  EXPECT_EQ(BudgetInSnippets(300, 15), 45);
  EXPECT_EQ(BudgetInSnippets(300, 100), 300);
  EXPECT_THROW(BudgetInSnippets(10, 0), Error);
  EXPECT_THROW(BudgetInSnippets(10, 100.5), Error);
}

TEST(BudgetTest, Monotone) {
  for (int n = 1; n < 120; n += 7) {
    int last = 0;
    for (double pct = 0.5; pct <= 100.0; pct += 0.5) {
      const int b = BudgetInSnippets(n, pct);
      EXPECT_GE(b, last);
      EXPECT_LE(b, BudgetInSnippets(n + 1, pct));
      last = b;
    }
  }
}

TEST(ValidateTest, RejectsOverlap) {
  AnnotatedVideo v = MakeVideo(3, {Seg(0, 4, 1), Seg(3, 6, 2)});
  EXPECT_THROW(ValidateVideo(v), Error);
}

TEST(ValidateTest, RejectsRowMismatch) {
  AnnotatedVideo v = MakeVideo(30, {});
  v.features["f"] = {"f", FeatureKind::kDense, FeatureValues(29, 4)};
  v.features["f"].values.setZero();
  EXPECT_THROW(ValidateVideo(v), Error);
}

TEST(ValidateTest, RejectsRepetitiveNegative) {
  AnnotatedVideo v = MakeVideo(3, {Seg(0, 6, -1, true)});
  EXPECT_THROW(ValidateVideo(v), Error);
}

TEST(ValidateTest, RejectsBadShots) {
  AnnotatedVideo v = MakeVideo(6, {});
  v.shots = {{0, 2}, {3, 6}};
  EXPECT_THROW(ValidateVideo(v), Error);
  v.shots = {{0, 2}, {2, 5}};
  EXPECT_THROW(ValidateVideo(v), Error);
}

TEST(ValidateTest, RejectsProbabilityOutOfRange) {
  AnnotatedVideo v = MakeVideo(2, {});
  FeatureMatrix p{"p", FeatureKind::kProbability, FeatureValues(2, 1)};
  p.values << 0.5f, 1.5f;
  v.features.emplace("p", p);
  EXPECT_THROW(ValidateVideo(v), Error);
}

TEST(FeatureFileTest, RoundTripBitExact) {
  const auto dir = ScratchDir("feature_file");
  FeatureValues values(30, 4);
  Rng rng(3);
  for (int i = 0; i < values.size(); ++i) {
    values.data()[i] = static_cast<float>(StandardNormal(rng));
  }
  values(0, 0) = -0.0f;
  values(1, 1) = 1e-38f;
  WriteFeatureFile(dir / "f.dsvs", values);
  const FeatureValues back = ReadFeatureFile(dir / "f.dsvs");
  ASSERT_EQ(back.rows(), 30);
  ASSERT_EQ(back.cols(), 4);
  EXPECT_EQ(
      std::memcmp(back.data(), values.data(), sizeof(float) * values.size()),
      0);
}

TEST(FeatureFileTest, LayoutIsLittleEndianHeaderThenRows) {
  const auto dir = ScratchDir("feature_layout");
  FeatureValues values(2, 3);
  values << 1, 2, 3, 4, 5, 6;
  WriteFeatureFile(dir / "f.dsvs", values);
  std::ifstream in(dir / "f.dsvs", std::ios::binary);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  ASSERT_EQ(bytes.size(), 16u + 6u * 4u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "DSVS");
  const std::vector<unsigned char> header = {1, 0, 0, 0, 2, 0,
                                             0, 0, 3, 0, 0, 0};
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin() + 4));
  // 2.0f = 0x40000000, second value, little-endian.
  EXPECT_EQ(bytes[20], 0x00);
  EXPECT_EQ(bytes[23], 0x40);
}

TEST(FeatureFileTest, RejectsBadMagicAndTruncation) {
  const auto dir = ScratchDir("feature_bad");
  {
    std::ofstream out(dir / "bad.dsvs", std::ios::binary);
    out << "XXXX";
  }
  EXPECT_THROW(ReadFeatureFile(dir / "bad.dsvs"), Error);
  FeatureValues values(4, 2);
  values.setOnes();
  WriteFeatureFile(dir / "ok.dsvs", values);
  std::filesystem::resize_file(dir / "ok.dsvs", 16 + 4 * 7);
  EXPECT_THROW(ReadFeatureFile(dir / "ok.dsvs"), Error);
  EXPECT_THROW(ReadFeatureFile(dir / "missing.dsvs"), Error);
}

void ExpectSameVideo(const AnnotatedVideo& a, const AnnotatedVideo& b) {
  EXPECT_EQ(a.id, b.id);
  EXPECT_EQ(a.domain, b.domain);
  EXPECT_EQ(a.snippet_seconds, b.snippet_seconds);
  EXPECT_EQ(a.n_snippets, b.n_snippets);
  EXPECT_EQ(a.shots, b.shots);
  ASSERT_EQ(a.segments.size(), b.segments.size());
  for (size_t i = 0; i < a.segments.size(); ++i) {
    EXPECT_EQ(a.segments[i].start_sec, b.segments[i].start_sec);
    EXPECT_EQ(a.segments[i].end_sec, b.segments[i].end_sec);
    EXPECT_EQ(a.segments[i].rating, b.segments[i].rating);
    EXPECT_EQ(a.segments[i].repetitive, b.segments[i].repetitive);
    EXPECT_EQ(a.segments[i].description, b.segments[i].description);
  }
  ASSERT_EQ(a.features.size(), b.features.size());
  for (const auto& [name, fm] : a.features) {
    const FeatureMatrix& other = b.features.at(name);
    EXPECT_EQ(fm.kind, other.kind);
    ASSERT_EQ(fm.rows(), other.rows());
    ASSERT_EQ(fm.cols(), other.cols());
    EXPECT_EQ(std::memcmp(fm.values.data(), other.values.data(),
                          sizeof(float) * fm.values.size()),
              0);
  }
}

TEST(ManifestTest, RoundTrip) {
  const auto dir = ScratchDir("manifest");
  Rng rng(11);
  std::vector<AnnotatedVideo> videos;
  for (int i = 0; i < 3; ++i) {
    AnnotatedVideo v = RandomVideo(rng, 20 + i);
    v.id = "vid_" + std::to_string(i);
    v.domain = i < 2 ? "a" : "b";
    v.segments[0].description = "first \"quoted\" segment";
    videos.push_back(std::move(v));
  }
  SaveManifest(dir / "manifest.json", videos);
  const auto loaded = LoadManifest(dir / "manifest.json");
  ASSERT_EQ(loaded.size(), videos.size());
  for (size_t i = 0; i < videos.size(); ++i) {
    ExpectSameVideo(videos[i], loaded[i]);
  }
  // Second round trip through a different directory.
  const auto dir2 = ScratchDir("manifest2");
  SaveManifest(dir2 / "m.json", loaded);
  const auto again = LoadManifest(dir2 / "m.json");
  for (size_t i = 0; i < videos.size(); ++i) {
    ExpectSameVideo(videos[i], again[i]);
  }
}

TEST(ManifestTest, OneVideoDeclaredShape) {
  const auto dir = ScratchDir("manifest_shape");
  AnnotatedVideo v = MakeVideo(30, {});
  v.features.clear();
  v.features["f"] = {"f", FeatureKind::kDense, FeatureValues(30, 4)};
  v.features["f"].values.setConstant(0.25f);
  SaveManifest(dir / "m.json", std::vector<AnnotatedVideo>{v});
  const auto loaded = LoadManifest(dir / "m.json");
  ASSERT_EQ(loaded.size(), 1u);
  EXPECT_EQ(loaded[0].features.at("f").rows(), 30);
}

TEST(ManifestTest, RowMismatchOnLoad) {
  const auto dir = ScratchDir("manifest_rows");
  AnnotatedVideo v = MakeVideo(30, {});
  SaveManifest(dir / "m.json", std::vector<AnnotatedVideo>{v});
  // Replace the feature file with one of 29 rows.
  FeatureValues short_values(29, 3);
  short_values.setZero();
  for (const auto& entry :
       std::filesystem::directory_iterator(dir / "features")) {
    WriteFeatureFile(entry.path(), short_values);
  }
  EXPECT_THROW(LoadManifest(dir / "m.json"), Error);
}

TEST(ManifestTest, MissingFeatureFileAndMalformedManifest) {
  const auto dir = ScratchDir("manifest_missing");
  AnnotatedVideo v = MakeVideo(5, {});
  SaveManifest(dir / "m.json", std::vector<AnnotatedVideo>{v});
  std::filesystem::remove_all(dir / "features");
  EXPECT_THROW(LoadManifest(dir / "m.json"), Error);
  {
    std::ofstream out(dir / "broken.json");
    out << "{\"videos\": [";
  }
  EXPECT_THROW(LoadManifest(dir / "broken.json"), Error);
  EXPECT_THROW(LoadManifest(dir / "absent.json"), Error);
}

TEST(SummaryFileTest, RoundTrip) {
  const auto dir = ScratchDir("summary");
  SummaryFile s{"vid", 4, {1, 5, 7, 9}};
  SaveSummary(dir / "s.json", s);
  const SummaryFile back = LoadSummary(dir / "s.json");
  EXPECT_EQ(back.video_id, "vid");
  EXPECT_EQ(back.budget_snippets, 4);
  EXPECT_EQ(back.snippet_indices, s.snippet_indices);
}

TEST(SummaryTest, MakeSummarySortsAndDeduplicates) {
  EXPECT_EQ(MakeSummary("v", {5, 1, 3}).snippets, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(MakeSummary("v", {4, 1, 4}).snippets, (std::vector<int>{1, 4}));
}

TEST(AnnotationTest, RoundTripAndClamp) {
  const auto dir = ScratchDir("annotation");
  std::vector<Segment> segs = {testing::Seg(0, 4, 3, true),
                               testing::Seg(4, 10, -2)};
  SaveAnnotations(dir / "a.json", segs);
  const auto back = LoadAnnotations(dir / "a.json");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].rating, 3);
  EXPECT_TRUE(back[0].repetitive);
  EXPECT_EQ(back[1].end_sec, 10.0);
  {
    std::ofstream out(dir / "wide.json");
    out << R"([{"start_sec": 0, "end_sec": 2, "rating": 5,
               "repetitive": false, "description": ""}])";
  }
  EXPECT_EQ(LoadAnnotations(dir / "wide.json")[0].rating, kMaxRating);
}

}  // namespace
}  // namespace vsumm
