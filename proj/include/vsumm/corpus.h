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

// Video corpus data model: snippets, rated segments, feature matrices, shots
// and summaries, plus the manifest / annotation / summary file formats.
//
// A video is cut into fixed-length snippets (2 s by default); snippets are
// the ground-set elements every other module works on. Annotators rate
// contiguous spans in seconds; RasterizeSegments maps those onto snippet
// indices.

#ifndef VSUMM_CORPUS_H_
#define VSUMM_CORPUS_H_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace vsumm {

inline constexpr int kMinRating = -3;
inline constexpr int kMaxRating = 3;

struct Segment {
  double start_sec = 0.0;
  double end_sec = 0.0;
  int rating = 0;
  bool repetitive = false;
  std::string description;
};

enum class FeatureKind { kDense, kProbability, kCount };

const char* FeatureKindName(FeatureKind kind);
FeatureKind ParseFeatureKind(const std::string& name);

using FeatureValues =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// One feature family for one video: row i is the feature vector of snippet i.
struct FeatureMatrix {
  std::string name;
  FeatureKind kind = FeatureKind::kDense;
  FeatureValues values;

  int rows() const { return static_cast<int>(values.rows()); }
  int cols() const { return static_cast<int>(values.cols()); }
};

// Half-open snippet-index range [begin, end).
struct ShotRange {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
  friend bool operator==(const ShotRange&, const ShotRange&) = default;
};

struct AnnotatedVideo {
  std::string id;
  std::string domain;
  double snippet_seconds = 2.0;
  int n_snippets = 0;
  std::map<std::string, FeatureMatrix> features;
  std::vector<ShotRange> shots;
  std::vector<Segment> segments;
};

// A set of snippet indices, kept sorted and duplicate free.
struct Summary {
  std::string video_id;
  std::vector<int> snippets;
};

Summary MakeSummary(std::string video_id, std::vector<int> snippets);

// A rated run of snippets after rasterization. Filler spans cover snippets
// no annotated segment claims; they are rated 0 and non-repetitive.
struct RatedSpan {
  int begin = 0;
  int end = 0;
  int rating = 0;
  bool repetitive = false;
  bool filler = false;

  int length() const { return end - begin; }
  friend bool operator==(const RatedSpan&, const RatedSpan&) = default;
};

// Throws Error when an invariant of AnnotatedVideo does not hold. Ratings
// outside [-3, 3] are not an error here; they are clamped on load.
void ValidateVideo(const AnnotatedVideo& video);

// Assigns every snippet to the segment covering strictly more than half of
// its duration. Snippets with no such segment (including exact 50/50 splits)
// become rating-0 filler; consecutive filler snippets are merged.
std::vector<RatedSpan> RasterizeSegments(const AnnotatedVideo& video);

// max(1, floor(budget_pct / 100 * n_snippets)); budget_pct in (0, 100].
int BudgetInSnippets(int n_snippets, double budget_pct);
int BudgetInSnippets(const AnnotatedVideo& video, double budget_pct);

// Manifest: JSON object {"videos": [...]} where each entry carries id,
// domain, snippet_seconds, n_snippets, features {name: {path, kind}},
// shots [[begin, end], ...] and an annotation file path. Relative paths are
// resolved against the manifest's directory.
std::vector<AnnotatedVideo> LoadManifest(const std::filesystem::path& path);

// Writes the manifest plus one feature file per (video, family) under
// `<dir>/features/` and one annotation file per video under
// `<dir>/annotations/`.
void SaveManifest(const std::filesystem::path& path,
                  std::span<const AnnotatedVideo> videos);

std::vector<Segment> LoadAnnotations(const std::filesystem::path& path);
void SaveAnnotations(const std::filesystem::path& path,
                     std::span<const Segment> segments);

struct SummaryFile {
  std::string video_id;
  int budget_snippets = 0;
  std::vector<int> snippet_indices;
};

SummaryFile LoadSummary(const std::filesystem::path& path);
void SaveSummary(const std::filesystem::path& path, const SummaryFile& summary);

// Looks a video up by id; throws Error when absent.
const AnnotatedVideo& FindVideo(std::span<const AnnotatedVideo> videos,
                                const std::string& id);

}  // namespace vsumm

#endif  // VSUMM_CORPUS_H_
