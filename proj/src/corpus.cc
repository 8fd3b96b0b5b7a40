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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "vsumm/error.h"
#include "vsumm/feature_file.h"

namespace vsumm {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Slack for probability features that were averaged in single precision.
constexpr float kProbabilitySlack = 1e-4f;

json ReadJsonFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const fs::path& path, const json& doc) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path.string());
  out << doc.dump(2) << "\n";
}

template <typename T>
T Required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error("missing field '" + std::string(key) + "' in " + where);
  }
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw Error("bad field '" + std::string(key) + "' in " + where + ": " +
                e.what());
  }
}

Segment ParseSegment(const json& j, const std::string& where) {
  Segment s;
  s.start_sec = Required<double>(j, "start_sec", where);
  s.end_sec = Required<double>(j, "end_sec", where);
  s.rating =
      std::clamp(Required<int>(j, "rating", where), kMinRating, kMaxRating);
  s.repetitive = j.value("repetitive", false);
  s.description = j.value("description", std::string());
  return s;
}

json SegmentToJson(const Segment& s) {
  return json{{"start_sec", s.start_sec},
              {"end_sec", s.end_sec},
              {"rating", s.rating},
              {"repetitive", s.repetitive},
              {"description", s.description}};
}

fs::path Resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::string FileSafe(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                    c == '-' || c == '.';
    if (!ok) c = '_';
  }
  return out;
}

}  // namespace

const char* FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kDense:
      return "dense";
    case FeatureKind::kProbability:
      return "probability";
    case FeatureKind::kCount:
      return "count";
  }
  return "dense";
}

FeatureKind ParseFeatureKind(const std::string& name) {
  if (name == "dense") return FeatureKind::kDense;
  if (name == "probability") return FeatureKind::kProbability;
  if (name == "count") return FeatureKind::kCount;
  throw Error("unknown feature kind: " + name);
}

Summary MakeSummary(std::string video_id, std::vector<int> snippets) {
  std::sort(snippets.begin(), snippets.end());
  snippets.erase(std::unique(snippets.begin(), snippets.end()), snippets.end());
  return Summary{std::move(video_id), std::move(snippets)};
}

void ValidateVideo(const AnnotatedVideo& video) {
  const std::string where = "video '" + video.id + "'";
  if (video.n_snippets <= 0) throw Error(where + ": n_snippets must be > 0");
  if (!(video.snippet_seconds > 0.0)) {
    throw Error(where + ": snippet_seconds must be > 0");
  }

  for (const auto& [name, fm] : video.features) {
    if (fm.rows() != video.n_snippets) {
      throw Error(
          where + ": feature '" + name + "' has " + std::to_string(fm.rows()) +
          " rows, expected n_snippets=" + std::to_string(video.n_snippets));
    }
    if (!fm.values.allFinite()) {
      throw Error(where + ": feature '" + name + "' has non-finite values");
    }
    if (fm.kind == FeatureKind::kProbability && fm.values.size() > 0 &&
        (fm.values.minCoeff() < -kProbabilitySlack ||
         fm.values.maxCoeff() > 1.0f + kProbabilitySlack)) {
      throw Error(where + ": probability feature '" + name +
                  "' has values outside [0, 1]");
    }
  }

  int expected_begin = 0;
  for (const ShotRange& shot : video.shots) {
    if (shot.begin != expected_begin || shot.end <= shot.begin) {
      throw Error(where + ": shots do not partition the snippet range");
    }
    expected_begin = shot.end;
  }
  if (!video.shots.empty() && expected_begin != video.n_snippets) {
    throw Error(where + ": shots do not cover all snippets");
  }

  std::vector<Segment> sorted = video.segments;
  std::sort(sorted.begin(), sorted.end(),
            [](const Segment& a, const Segment& b) {
              return a.start_sec < b.start_sec;
            });
  for (size_t i = 0; i < sorted.size(); ++i) {
    const Segment& s = sorted[i];
    if (s.start_sec < 0.0 || !(s.end_sec > s.start_sec)) {
      throw Error(where + ": segment [" + std::to_string(s.start_sec) + ", " +
                  std::to_string(s.end_sec) + ") is empty or negative");
    }
    if (s.repetitive && s.rating < 0) {
      throw Error(where + ": negatively rated segment marked repetitive");
    }
    if (i > 0 && s.start_sec < sorted[i - 1].end_sec) {
      throw Error(where + ": overlapping segments at " +
                  std::to_string(s.start_sec) + "s");
    }
  }
}

std::vector<RatedSpan> RasterizeSegments(const AnnotatedVideo& video) {
  std::vector<Segment> sorted = video.segments;
  std::sort(sorted.begin(), sorted.end(),
            [](const Segment& a, const Segment& b) {
              return a.start_sec < b.start_sec;
            });

  const double len = video.snippet_seconds;
  const int n = video.n_snippets;
  // owner[i] = index into `sorted`, or -1 for filler.
  std::vector<int> owner(n, -1);
  size_t cursor = 0;
  for (int i = 0; i < n; ++i) {
    const double lo = i * len;
    const double hi = lo + len;
    while (cursor < sorted.size() && sorted[cursor].end_sec <= lo) ++cursor;
    for (size_t s = cursor; s < sorted.size() && sorted[s].start_sec < hi;
         ++s) {
      const double overlap =
          std::min(hi, sorted[s].end_sec) - std::max(lo, sorted[s].start_sec);
      // Strict majority; an exact half goes to filler.
      if (2.0 * overlap > len * (1.0 + 1e-12)) {
        owner[i] = static_cast<int>(s);
        break;
      }
    }
  }

  std::vector<RatedSpan> spans;
  int begin = 0;
  for (int i = 1; i <= n; ++i) {
    if (i < n && owner[i] == owner[begin]) continue;
    RatedSpan span;
    span.begin = begin;
    span.end = i;
    if (owner[begin] >= 0) {
      const Segment& s = sorted[owner[begin]];
      span.rating = std::clamp(s.rating, kMinRating, kMaxRating);
      span.repetitive = s.repetitive && s.rating >= 0;
    } else {
      span.filler = true;
    }
    spans.push_back(span);
    begin = i;
  }
  return spans;
}

int BudgetInSnippets(int n_snippets, double budget_pct) {
  if (!(budget_pct > 0.0) || budget_pct > 100.0) {
    throw Error("budget percentage must be in (0, 100], got " +
                std::to_string(budget_pct));
  }
  const int raw =
      static_cast<int>(std::floor(budget_pct * n_snippets / 100.0 + 1e-9));
  return std::max(1, std::min(raw, n_snippets));
}

int BudgetInSnippets(const AnnotatedVideo& video, double budget_pct) {
  return BudgetInSnippets(video.n_snippets, budget_pct);
}

std::vector<Segment> LoadAnnotations(const fs::path& path) {
  const json doc = ReadJsonFile(path);
  const json& arr = doc.is_object() ? doc.at("segments") : doc;
  if (!arr.is_array()) {
    throw Error("annotation file is not an array: " + path.string());
  }
  std::vector<Segment> segments;
  for (const json& j : arr) segments.push_back(ParseSegment(j, path.string()));
  return segments;
}

void SaveAnnotations(const fs::path& path, std::span<const Segment> segments) {
  json arr = json::array();
  for (const Segment& s : segments) arr.push_back(SegmentToJson(s));
  WriteJsonFile(path, arr);
}

std::vector<AnnotatedVideo> LoadManifest(const fs::path& path) {
  const json doc = ReadJsonFile(path);
  const fs::path base = path.parent_path();
  const json& entries = doc.is_object() ? doc.at("videos") : doc;
  if (!entries.is_array()) throw Error("manifest has no video list");

  std::vector<AnnotatedVideo> videos;
  for (const json& entry : entries) {
    AnnotatedVideo v;
    v.id = Required<std::string>(entry, "id", "manifest entry");
    const std::string where = "manifest entry '" + v.id + "'";
    v.domain = entry.value("domain", std::string());
    v.snippet_seconds = entry.value("snippet_seconds", 2.0);
    v.n_snippets = Required<int>(entry, "n_snippets", where);

    if (auto it = entry.find("features"); it != entry.end()) {
      for (const auto& [name, spec] : it->items()) {
        FeatureMatrix fm;
        fm.name = name;
        std::string file;
        if (spec.is_string()) {
          file = spec.get<std::string>();
        } else {
          file = Required<std::string>(spec, "path", where);
          fm.kind = ParseFeatureKind(spec.value("kind", std::string("dense")));
        }
        const fs::path resolved = Resolve(base, file);
        if (!fs::exists(resolved)) {
          throw Error(where + ": missing feature file " + resolved.string());
        }
        fm.values = ReadFeatureFile(resolved);
        v.features.emplace(name, std::move(fm));
      }
    }

    if (auto it = entry.find("shots"); it != entry.end()) {
      for (const json& pair : *it) {
        if (!pair.is_array() || pair.size() != 2) {
          throw Error(where + ": shots must be [begin, end] pairs");
        }
        v.shots.push_back({pair[0].get<int>(), pair[1].get<int>()});
      }
    }
    if (v.shots.empty()) v.shots.push_back({0, v.n_snippets});

    if (auto it = entry.find("annotation"); it != entry.end()) {
      v.segments = LoadAnnotations(Resolve(base, it->get<std::string>()));
    } else if (auto seg = entry.find("segments"); seg != entry.end()) {
      for (const json& j : *seg) v.segments.push_back(ParseSegment(j, where));
    }

    ValidateVideo(v);
    videos.push_back(std::move(v));
  }
  return videos;
}

void SaveManifest(const fs::path& path,
                  std::span<const AnnotatedVideo> videos) {
  const fs::path base = path.parent_path();
  json entries = json::array();
  for (const AnnotatedVideo& v : videos) {
    const std::string stem = FileSafe(v.id);
    json features = json::object();
    for (const auto& [name, fm] : v.features) {
      const std::string rel =
          "features/" + stem + "." + FileSafe(name) + ".dsvs";
      WriteFeatureFile(base / rel, fm.values);
      features[name] = json{{"path", rel}, {"kind", FeatureKindName(fm.kind)}};
    }
    json shots = json::array();
    for (const ShotRange& s : v.shots) shots.push_back({s.begin, s.end});
    const std::string annotation = "annotations/" + stem + ".json";
    SaveAnnotations(base / annotation, v.segments);

    entries.push_back(json{{"id", v.id},
                           {"domain", v.domain},
                           {"snippet_seconds", v.snippet_seconds},
                           {"n_snippets", v.n_snippets},
                           {"features", features},
                           {"shots", shots},
                           {"annotation", annotation}});
  }
  WriteJsonFile(
      path,
      json{{"format", "vsumm-manifest"}, {"version", 1}, {"videos", entries}});
}

SummaryFile LoadSummary(const fs::path& path) {
  const json doc = ReadJsonFile(path);
  SummaryFile s;
  s.video_id = Required<std::string>(doc, "video_id", path.string());
  s.budget_snippets = doc.value("budget_snippets", 0);
  s.snippet_indices =
      Required<std::vector<int>>(doc, "snippet_indices", path.string());
  return s;
}

void SaveSummary(const fs::path& path, const SummaryFile& summary) {
  WriteJsonFile(path, json{{"video_id", summary.video_id},
                           {"budget_snippets", summary.budget_snippets},
                           {"snippet_indices", summary.snippet_indices}});
}

const AnnotatedVideo& FindVideo(std::span<const AnnotatedVideo> videos,
                                const std::string& id) {
  for (const AnnotatedVideo& v : videos) {
    if (v.id == id) return v;
  }
  throw Error("no video with id '" + id + "'");
}

}  // namespace vsumm
