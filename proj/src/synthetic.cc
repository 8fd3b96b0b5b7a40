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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "vsumm/error.h"
#include "vsumm/random.h"

namespace vsumm {
namespace {

using nlohmann::json;

// Prototype vectors shared by every domain of a corpus.
struct Prototypes {
  std::vector<Eigen::VectorXd> scene;
  std::vector<Eigen::VectorXd> motion;
  std::vector<Eigen::VectorXd> concepts;  // activation probabilities
  std::vector<Eigen::VectorXd> counts;    // expected object counts
};

Eigen::VectorXd UnitGaussian(Rng& rng, int dim) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = StandardNormal(rng);
  return v / v.norm();
}

Eigen::VectorXd Gaussian(Rng& rng, int dim, double sd) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = sd * StandardNormal(rng);
  return v;
}

Prototypes MakePrototypes(const SyntheticCorpusConfig& c, int concepts) {
  Rng rng(MixSeed(c.seed, 0x70726f));
  Prototypes p;
  for (int k = 0; k < kRatingLevels; ++k) {
    p.scene.push_back(UnitGaussian(rng, c.scene_dim) *
                      std::sqrt(static_cast<double>(c.scene_dim)));
    p.motion.push_back(UnitGaussian(rng, c.motion_dim) *
                       std::sqrt(static_cast<double>(c.motion_dim)));
    Eigen::VectorXd prob = Eigen::VectorXd::Constant(concepts, 0.1);
    for (int idx :
         SampleWithoutReplacement(rng, concepts, std::min(3, concepts))) {
      prob[idx] = 0.8;
    }
    p.concepts.push_back(prob);
    Eigen::VectorXd rate(c.count_dim);
    for (int i = 0; i < c.count_dim; ++i) rate[i] = 2.0 * UniformUnit(rng);
    p.counts.push_back(rate);
  }
  return p;
}

int Draw(Rng& rng, const double* weights, int n) {
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += weights[i];
  double u = UniformUnit(rng) * total;
  for (int i = 0; i < n; ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  return n - 1;
}

// Knuth's multiplication method; fine for the small means used here.
int Poisson(Rng& rng, double mean) {
  const double limit = std::exp(-mean);
  double prod = UniformUnit(rng);
  int k = 0;
  while (prod > limit) {
    ++k;
    prod *= UniformUnit(rng);
  }
  return k;
}

struct PlannedSegment {
  int begin = 0;
  int end = 0;
  int rating = 0;
  bool repetitive = false;
  bool gap = false;
};

std::vector<PlannedSegment> PlanSegments(const SyntheticDomainSpec& d, int n,
                                         Rng& rng) {
  std::vector<PlannedSegment> plan;
  int pos = 0;
  const int span = d.max_segment_snippets - d.min_segment_snippets + 1;
  while (pos < n) {
    const int len =
        d.min_segment_snippets + static_cast<int>(UniformIndex(rng, span));
    PlannedSegment s;
    s.begin = pos;
    s.end = std::min(n, pos + len);
    const double u = UniformUnit(rng);
    if (u < d.gap_prob) {
      s.gap = true;
    } else if (u < d.gap_prob + d.negative_prob) {
      s.rating = -1 - Draw(rng, d.negative_weights.data(), 3);
    } else {
      s.rating = Draw(rng, d.positive_weights.data(), 4);
      s.repetitive = UniformUnit(rng) < d.repetitive_prob;
    }
    plan.push_back(s);
    pos = s.end;
  }
  return plan;
}

json DomainToJson(const SyntheticDomainSpec& d) {
  return json{
      {"name", d.name},
      {"concept_vocabulary", d.concept_vocabulary},
      {"permutation", d.permutation},
      {"separation", d.separation},
      {"segment_snippets", {d.min_segment_snippets, d.max_segment_snippets}},
      {"repetitive_prob", d.repetitive_prob},
      {"negative_prob", d.negative_prob},
      {"gap_prob", d.gap_prob},
      {"positive_weights", d.positive_weights},
      {"negative_weights", d.negative_weights},
      {"seed", d.seed}};
}

SyntheticDomainSpec DomainFromJson(const json& j) {
  SyntheticDomainSpec d;
  d.name = j.at("name").get<std::string>();
  d.concept_vocabulary =
      j.value("concept_vocabulary", std::vector<std::string>{});
  if (j.contains("permutation")) {
    d.permutation = j.at("permutation").get<std::array<int, kRatingLevels>>();
  }
  d.separation = j.value("separation", d.separation);
  if (j.contains("segment_snippets")) {
    const auto range = j.at("segment_snippets").get<std::array<int, 2>>();
    d.min_segment_snippets = range[0];
    d.max_segment_snippets = range[1];
  }
  d.repetitive_prob = j.value("repetitive_prob", d.repetitive_prob);
  d.negative_prob = j.value("negative_prob", d.negative_prob);
  d.gap_prob = j.value("gap_prob", d.gap_prob);
  if (j.contains("positive_weights")) {
    d.positive_weights = j.at("positive_weights").get<std::array<double, 4>>();
  }
  if (j.contains("negative_weights")) {
    d.negative_weights = j.at("negative_weights").get<std::array<double, 3>>();
  }
  d.seed = j.value("seed", d.seed);
  return d;
}

}  // namespace

void SyntheticDomainSpec::Validate() const {
  if (name.empty()) throw Error("synthetic domain needs a name");
  if (concept_vocabulary.empty()) {
    throw Error("domain '" + name + "' has an empty concept vocabulary");
  }
  std::array<int, kRatingLevels> sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < kRatingLevels; ++i) {
    if (sorted[i] != i) {
      throw Error("domain '" + name +
                  "': rating permutation must be a "
                  "permutation of 0..6");
    }
  }
  if (separation < 0.0) throw Error("separation must be >= 0");
  if (min_segment_snippets < 1 || max_segment_snippets < min_segment_snippets) {
    throw Error("domain '" + name + "': degenerate segment length range");
  }
  for (double p : {repetitive_prob, negative_prob, gap_prob}) {
    if (p < 0.0 || p > 1.0) throw Error("probabilities must be in [0, 1]");
  }
  if (negative_prob + gap_prob >= 1.0) {
    throw Error("domain '" + name + "': no room for non-negative segments");
  }
  double pos = 0.0;
  for (double w : positive_weights) {
    if (w < 0.0) throw Error("rating weights must be >= 0");
    pos += w;
  }
  double neg = 0.0;
  for (double w : negative_weights) {
    if (w < 0.0) throw Error("rating weights must be >= 0");
    neg += w;
  }
  if (!(pos > 0.0) || !(neg > 0.0)) {
    throw Error("domain '" + name + "': rating weights sum to zero");
  }
}

void SyntheticCorpusConfig::Validate() const {
  if (domains.empty()) throw Error("synthetic corpus needs a domain");
  if (videos_per_domain < 1 || snippets_per_video < 1) {
    throw Error("synthetic corpus needs videos and snippets");
  }
  if (!(snippet_seconds > 0.0)) throw Error("snippet_seconds must be > 0");
  if (scene_dim < 1 || motion_dim < 1 || count_dim < 1) {
    throw Error("feature dimensions must be >= 1");
  }
  std::set<std::string> names;
  for (const SyntheticDomainSpec& d : domains) {
    d.Validate();
    if (!names.insert(d.name).second) {
      throw Error("duplicate synthetic domain '" + d.name + "'");
    }
    if (d.concept_vocabulary.size() != domains[0].concept_vocabulary.size()) {
      throw Error("all domains must share the concept vocabulary size");
    }
  }
}

SyntheticCorpusConfig DefaultSyntheticConfig() {
  SyntheticCorpusConfig c;
  c.seed = 20260101;
  const std::vector<std::string> vocab = {
      "person", "cake",  "ball", "bat",     "car",  "tree",
      "crowd",  "table", "dog",  "balloon", "road", "screen"};
  const std::array<std::array<int, kRatingLevels>, 3> perms = {{
      {0, 1, 2, 3, 4, 5, 6},
      {6, 5, 4, 3, 2, 1, 0},
      {3, 6, 0, 2, 5, 1, 4},
  }};
  const char* names[] = {"birthday", "cricket", "surveillance"};
  for (int i = 0; i < 3; ++i) {
    SyntheticDomainSpec d;
    d.name = names[i];
    d.concept_vocabulary = vocab;
    d.permutation = perms[i];
    d.seed = static_cast<uint64_t>(i + 1);
    c.domains.push_back(d);
  }
  return c;
}

SyntheticCorpusConfig LoadSyntheticConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open synthetic config: " + path.string());
  try {
    const json j = json::parse(in);
    SyntheticCorpusConfig c;
    c.seed = j.value("seed", c.seed);
    c.videos_per_domain = j.value("videos_per_domain", c.videos_per_domain);
    c.snippets_per_video = j.value("snippets_per_video", c.snippets_per_video);
    c.snippet_seconds = j.value("snippet_seconds", c.snippet_seconds);
    c.scene_dim = j.value("scene_dim", c.scene_dim);
    c.motion_dim = j.value("motion_dim", c.motion_dim);
    c.count_dim = j.value("count_dim", c.count_dim);
    c.segment_jitter = j.value("segment_jitter", c.segment_jitter);
    c.snippet_noise = j.value("snippet_noise", c.snippet_noise);
    c.repetitive_noise_factor =
        j.value("repetitive_noise_factor", c.repetitive_noise_factor);
    c.motion_separation_factor =
        j.value("motion_separation_factor", c.motion_separation_factor);
    for (const json& d : j.at("domains"))
      c.domains.push_back(DomainFromJson(d));
    c.Validate();
    return c;
  } catch (const json::exception& e) {
    throw Error("malformed synthetic config " + path.string() + ": " +
                e.what());
  }
}

void SaveSyntheticConfig(const std::filesystem::path& path,
                         const SyntheticCorpusConfig& c) {
  json domains = json::array();
  for (const SyntheticDomainSpec& d : c.domains) {
    domains.push_back(DomainToJson(d));
  }
  json j{{"seed", c.seed},
         {"videos_per_domain", c.videos_per_domain},
         {"snippets_per_video", c.snippets_per_video},
         {"snippet_seconds", c.snippet_seconds},
         {"scene_dim", c.scene_dim},
         {"motion_dim", c.motion_dim},
         {"count_dim", c.count_dim},
         {"segment_jitter", c.segment_jitter},
         {"snippet_noise", c.snippet_noise},
         {"repetitive_noise_factor", c.repetitive_noise_factor},
         {"motion_separation_factor", c.motion_separation_factor},
         {"domains", domains}};
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write synthetic config: " + path.string());
  out << j.dump(2) << "\n";
}

std::vector<AnnotatedVideo> GenerateSyntheticCorpus(
    const SyntheticCorpusConfig& config) {
  config.Validate();
  const int concepts =
      static_cast<int>(config.domains[0].concept_vocabulary.size());
  const Prototypes proto = MakePrototypes(config, concepts);
  const int n = config.snippets_per_video;
  const double sec = config.snippet_seconds;

  std::vector<AnnotatedVideo> videos;
  for (size_t di = 0; di < config.domains.size(); ++di) {
    const SyntheticDomainSpec& d = config.domains[di];
    for (int vi = 0; vi < config.videos_per_domain; ++vi) {
      Rng rng(MixSeed(MixSeed(config.seed, d.seed), static_cast<uint64_t>(vi)));
      AnnotatedVideo v;
      v.id = d.name + "_" + std::to_string(vi);
      v.domain = d.name;
      v.snippet_seconds = sec;
      v.n_snippets = n;

      const std::vector<PlannedSegment> plan = PlanSegments(d, n, rng);
      FeatureMatrix scene{kSceneFamily, FeatureKind::kDense,
                          FeatureValues(n, config.scene_dim)};
      FeatureMatrix motion{kMotionFamily, FeatureKind::kDense,
                           FeatureValues(n, config.motion_dim)};
      FeatureMatrix concept_probs{kConceptFamily, FeatureKind::kProbability,
                                  FeatureValues(n, concepts)};
      FeatureMatrix counts{kCountFamily, FeatureKind::kCount,
                           FeatureValues(n, config.count_dim)};

      int seg_index = 0;
      for (const PlannedSegment& s : plan) {
        const int cluster = d.permutation[s.rating - kMinRating];
        const double noise =
            config.snippet_noise *
            (s.repetitive ? config.repetitive_noise_factor : 1.0);
        const Eigen::VectorXd scene_offset =
            Gaussian(rng, config.scene_dim, config.segment_jitter);
        const Eigen::VectorXd motion_offset =
            Gaussian(rng, config.motion_dim, config.segment_jitter);
        const Eigen::VectorXd scene_center =
            d.separation * proto.scene[cluster] + scene_offset;
        const Eigen::VectorXd motion_center =
            d.separation * config.motion_separation_factor *
                proto.motion[cluster] +
            motion_offset;
        for (int i = s.begin; i < s.end; ++i) {
          scene.values.row(i) =
              (scene_center + Gaussian(rng, config.scene_dim, noise))
                  .cast<float>()
                  .transpose();
          motion.values.row(i) =
              (motion_center + Gaussian(rng, config.motion_dim, 2.0 * noise))
                  .cast<float>()
                  .transpose();
          for (int u = 0; u < concepts; ++u) {
            const double base =
                d.separation > 0.0 ? proto.concepts[cluster][u] : 0.3;
            const double p =
                std::clamp(base + 0.15 * StandardNormal(rng), 0.0, 1.0);
            concept_probs.values(i, u) = static_cast<float>(p);
          }
          for (int u = 0; u < config.count_dim; ++u) {
            const double mean =
                d.separation > 0.0 ? proto.counts[cluster][u] : 1.0;
            counts.values(i, u) = static_cast<float>(Poisson(rng, mean));
          }
        }
        if (!s.gap) {
          Segment seg;
          seg.start_sec = s.begin * sec;
          seg.end_sec = s.end * sec;
          seg.rating = s.rating;
          seg.repetitive = s.repetitive;
          seg.description = "segment " + std::to_string(seg_index++);
          v.segments.push_back(seg);
        }
        // Shots follow segment boundaries, with an extra cut inside some
        // longer segments.
        const int len = s.end - s.begin;
        if (len >= 8 && UniformIndex(rng, 2) == 1) {
          const int cut =
              s.begin + 2 + static_cast<int>(UniformIndex(rng, len - 3));
          v.shots.push_back({s.begin, cut});
          v.shots.push_back({cut, s.end});
        } else {
          v.shots.push_back({s.begin, s.end});
        }
      }
      v.features.emplace(scene.name, std::move(scene));
      v.features.emplace(motion.name, std::move(motion));
      v.features.emplace(concept_probs.name, std::move(concept_probs));
      v.features.emplace(counts.name, std::move(counts));
      ValidateVideo(v);
      videos.push_back(std::move(v));
    }
  }
  return videos;
}

}  // namespace vsumm
