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

#include "vsumm/experiments.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include <nlohmann/json.hpp>

#include "vsumm/error.h"
#include "vsumm/gtgen.h"
#include "vsumm/random.h"

namespace vsumm {
namespace {

using nlohmann::json;

uint64_t StringSalt(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

double Mean(std::span<const double> v) { return Stat::Of(v).mean; }

// Each component alone with weight 1 and no modular block.
MixtureModel SingleComponentModel(const ComponentSpec& spec,
                                  const std::string& domain,
                                  const TrainingConfig& training) {
  MixtureModel m;
  m.domain = domain;
  m.components = {spec};
  m.w1 = Eigen::VectorXd(0);
  m.w2 = Eigen::VectorXd::Ones(1);
  m.config = training;
  return m;
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (!(budget_pct > 0.0 && budget_pct <= 100.0)) {
    throw Error("budget_pct must be in (0, 100]");
  }
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error("train_fraction must be in (0, 1)");
  }
  if (random_seeds < 1 || sanity_randoms < 1 || sanity_max_gt < 1) {
    throw Error("seed and sample counts must be >= 1");
  }
  training.Validate();
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open experiment config: " + path.string());
  ExperimentConfig c;
  try {
    const json j = json::parse(in);
    c.budget_pct = j.value("budget_pct", c.budget_pct);
    c.train_fraction = j.value("train_fraction", c.train_fraction);
    c.random_seeds = j.value("random_seeds", c.random_seeds);
    c.sanity_budgets = j.value("sanity_budgets", c.sanity_budgets);
    c.sanity_randoms = j.value("sanity_randoms", c.sanity_randoms);
    c.sanity_max_gt = j.value("sanity_max_gt", c.sanity_max_gt);
    if (j.contains("training")) {
      c.training = TrainingConfigFromJson(j.at("training"));
    }
    if (j.contains("grid")) {
      for (const json& g : j.at("grid")) {
        c.grid.push_back(ComponentSpecFromJson(g));
      }
    }
  } catch (const json::exception& e) {
    throw Error("malformed experiment config " + path.string() + ": " +
                e.what());
  }
  c.training.budget_pct = c.budget_pct;
  c.Validate();
  return c;
}

void SaveExperimentConfig(const std::filesystem::path& path,
                          const ExperimentConfig& c) {
  json grid = json::array();
  for (const ComponentSpec& s : c.grid) grid.push_back(ComponentSpecToJson(s));
  json training = TrainingConfigToJson(c.training);
  training.erase("seed");
  training.erase("budget_pct");
  json j{{"budget_pct", c.budget_pct},
         {"train_fraction", c.train_fraction},
         {"random_seeds", c.random_seeds},
         {"sanity_budgets", c.sanity_budgets},
         {"sanity_randoms", c.sanity_randoms},
         {"sanity_max_gt", c.sanity_max_gt},
         {"training", training},
         {"grid", grid}};
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write experiment config: " + path.string());
  out << j.dump(2) << "\n";
}

std::vector<std::string> DomainsOf(std::span<const AnnotatedVideo> videos) {
  std::vector<std::string> out;
  for (const AnnotatedVideo& v : videos) {
    if (std::find(out.begin(), out.end(), v.domain) == out.end()) {
      out.push_back(v.domain);
    }
  }
  return out;
}

DomainSplit SplitDomain(std::span<const AnnotatedVideo> videos,
                        const std::string& domain, double train_fraction,
                        uint64_t master_seed) {
  std::vector<const AnnotatedVideo*> members;
  for (const AnnotatedVideo& v : videos) {
    if (v.domain == domain) members.push_back(&v);
  }
  if (members.empty()) throw Error("no videos in domain '" + domain + "'");
  Rng rng(MixSeed(master_seed, StringSalt("split:" + domain)));
  Shuffle(members, rng);
  const int n = static_cast<int>(members.size());
  int n_train = static_cast<int>(std::lround(train_fraction * n));
  n_train = std::clamp(n_train, 1, n >= 2 ? n - 1 : 1);
  DomainSplit split;
  split.train.assign(members.begin(), members.begin() + n_train);
  split.test.assign(members.begin() + n_train, members.end());
  return split;
}

TrainingConfig RunTrainingConfig(const ExperimentConfig& config,
                                 uint64_t master_seed) {
  TrainingConfig t = config.training;
  t.budget_pct = config.budget_pct;
  t.seed = MixSeed(master_seed, 0x747261696e);
  return t;
}

std::vector<ComponentSpec> ResolveGrid(const ExperimentConfig& config,
                                       std::span<const AnnotatedVideo> videos) {
  if (!config.grid.empty()) return config.grid;
  if (videos.empty()) throw Error("empty corpus");
  return DefaultComponentGrid(videos.front());
}

TrainingResult TrainDomainModel(std::span<const AnnotatedVideo> videos,
                                const DomainSplit& split,
                                const std::string& domain, ModelVariant variant,
                                const ExperimentConfig& config,
                                uint64_t master_seed) {
  const TrainingConfig training = RunTrainingConfig(config, master_seed);
  const std::vector<ComponentSpec> grid = ResolveGrid(config, videos);
  MixtureModel init =
      InitModel(grid, *split.train.front(), domain, variant, training);
  return Train(std::move(init), split.train, {}, training);
}

std::vector<double> TestLosses(const MixtureModel& model,
                               std::span<const AnnotatedVideo* const> test,
                               double budget_pct, const MeasureParams& params) {
  std::vector<double> out;
  for (const AnnotatedVideo* v : test) {
    out.push_back(SummarizeVideo(model, *v, budget_pct, params).score_loss);
  }
  return out;
}

BaselineResult RunBaselines(std::span<const AnnotatedVideo> videos,
                            const std::string& domain,
                            const ExperimentConfig& config,
                            uint64_t master_seed) {
  config.Validate();
  const DomainSplit split =
      SplitDomain(videos, domain, config.train_fraction, master_seed);
  const MeasureParams& params = config.training.measure;
  BaselineResult result;
  ReportTable& table = result.table;
  table.title = "ScoreLoss on test videos, domain " + domain + ", budget " +
                std::to_string(static_cast<int>(config.budget_pct)) + "%";
  table.columns = {"ScoreLoss"};

  auto add_row = [&](const std::string& label, std::span<const double> v) {
    const Stat s = Stat::Of(v);
    table.rows.push_back({label, {s}, ""});
    result.mean_loss[label] = s.mean;
  };

  const std::pair<const char*, ModelVariant> variants[] = {
      {kMethodFull, ModelVariant::kFull},
      {kMethodModular, ModelVariant::kModularOnly},
      {kMethodSubmodular, ModelVariant::kComponentsOnly}};
  for (const auto& [label, variant] : variants) {
    TrainingResult trained =
        TrainDomainModel(videos, split, domain, variant, config, master_seed);
    add_row(label,
            TestLosses(trained.model, split.test, config.budget_pct, params));
    result.models.emplace(label, std::move(trained.model));
  }

  // Random: every test video, every seed.
  std::vector<double> random_losses;
  std::vector<double> uniform_losses;
  for (size_t vi = 0; vi < split.test.size(); ++vi) {
    const AnnotatedVideo& v = *split.test[vi];
    const ScoreFunction score(v, params);
    const int budget = BudgetInSnippets(v, config.budget_pct);
    const ScoreBounds bounds = ComputeScoreBounds(score, budget);
    for (int s = 0; s < config.random_seeds; ++s) {
      const uint64_t seed =
          MixSeed(MixSeed(master_seed, StringSalt("random:" + v.id)), s);
      const std::vector<int> y = SampleRandomSummary(
          score, budget, RandomSummaryMode::kUniformRandom, seed);
      random_losses.push_back(MarginLoss(score.Score(y), bounds));
    }
    const std::vector<int> y = SampleRandomSummary(
        score, budget, RandomSummaryMode::kUniformSpaced, 0);
    uniform_losses.push_back(MarginLoss(score.Score(y), bounds));
  }
  add_row(kMethodRandom, random_losses);
  add_row(kMethodUniform, uniform_losses);

  // Single components.
  const TrainingConfig training = RunTrainingConfig(config, master_seed);
  std::vector<double> component_means;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_losses;
  for (const ComponentSpec& spec : ResolveGrid(config, videos)) {
    if (spec.kind == ComponentKind::kModular || !spec.EnabledFor(domain)) {
      continue;
    }
    const MixtureModel m = SingleComponentModel(spec, domain, training);
    const std::vector<double> losses =
        TestLosses(m, split.test, config.budget_pct, params);
    const double mean = Mean(losses);
    component_means.push_back(mean);
    if (mean < best) {
      best = mean;
      best_losses = losses;
      result.best_component = spec.Id();
    }
  }
  if (!component_means.empty()) {
    add_row(kMethodBestComponent, best_losses);
    table.rows.back().flag = result.best_component;
    add_row(kMethodAverageComponent, component_means);
  }
  table.notes.push_back("train videos: " + std::to_string(split.train.size()) +
                        ", test videos: " + std::to_string(split.test.size()));
  table.notes.push_back("Random: " + std::to_string(config.random_seeds) +
                        " seeds per test video");
  table.notes.push_back(
      "Average-Component cells are per-component means over test videos");
  return result;
}

CrossDomainResult RunCrossDomain(
    std::span<const AnnotatedVideo> videos,
    std::span<const std::string> domains, const ExperimentConfig& config,
    uint64_t master_seed,
    const std::map<std::string, MixtureModel>* full_models) {
  config.Validate();
  if (domains.size() < 2) throw Error("cross-domain needs >= 2 domains");
  const MeasureParams& params = config.training.measure;
  std::map<std::string, DomainSplit> splits;
  for (const std::string& d : domains) {
    splits.emplace(d,
                   SplitDomain(videos, d, config.train_fraction, master_seed));
  }
  CrossDomainResult result;
  result.domains.assign(domains.begin(), domains.end());
  const int m = static_cast<int>(domains.size());
  result.loss = Eigen::MatrixXd::Zero(m, m);
  ReportTable& table = result.table;
  table.title = "ScoreLoss, rows: trained on, columns: tested on";
  table.columns = result.domains;
  for (int a = 0; a < m; ++a) {
    MixtureModel model;
    if (full_models != nullptr && full_models->count(domains[a])) {
      model = full_models->at(domains[a]);
    } else {
      model = TrainDomainModel(videos, splits.at(domains[a]), domains[a],
                               ModelVariant::kFull, config, master_seed)
                  .model;
    }
    ReportRow row{domains[a], {}, ""};
    for (int b = 0; b < m; ++b) {
      const std::vector<double> losses = TestLosses(
          model, splits.at(domains[b]).test, config.budget_pct, params);
      const Stat s = Stat::Of(losses);
      result.loss(a, b) = s.mean;
      row.cells.push_back(s);
    }
    bool minimal = true;
    for (int b = 0; b < m; ++b) {
      if (b != a && !(result.loss(a, a) < result.loss(a, b))) minimal = false;
    }
    result.diagonal_minimal.push_back(minimal);
    if (!minimal) row.flag = "diagonal not strictly minimal";
    table.rows.push_back(row);
  }
  return result;
}

GtAblationResult RunGtAblation(std::span<const AnnotatedVideo> videos,
                               const std::string& domain,
                               const ExperimentConfig& config,
                               uint64_t master_seed,
                               const MixtureModel* random_gt_model) {
  config.Validate();
  const DomainSplit split =
      SplitDomain(videos, domain, config.train_fraction, master_seed);
  const MeasureParams& params = config.training.measure;
  GtAblationResult result;
  result.table.title = "GT ablation, domain " + domain;
  result.table.columns = {"ScoreLoss"};
  for (GtMode mode : {GtMode::kRandom, GtMode::kFixed}) {
    MixtureModel model;
    if (mode == GtMode::kRandom && random_gt_model != nullptr) {
      model = *random_gt_model;
    } else {
      ExperimentConfig c = config;
      c.training.gt_mode = mode;
      model = TrainDomainModel(videos, split, domain, ModelVariant::kFull, c,
                               master_seed)
                  .model;
    }
    const std::vector<double> losses =
        TestLosses(model, split.test, config.budget_pct, params);
    const Stat s = Stat::Of(losses);
    (mode == GtMode::kRandom ? result.random_gt_loss : result.fixed_gt_loss) =
        s.mean;
    result.table.rows.push_back(
        {mode == GtMode::kRandom ? "Random GTs" : "Same GT", {s}, ""});
  }
  return result;
}

GtSanityResult RunGtSanity(std::span<const AnnotatedVideo> videos,
                           const ExperimentConfig& config,
                           uint64_t master_seed) {
  config.Validate();
  const MeasureParams& params = config.training.measure;
  GtSanityResult result;
  ReportTable& table = result.table;
  table.title = "Normalized score: ground-truth pool vs positive-only random";
  table.columns = {"GT", "Random"};
  for (const AnnotatedVideo& v : videos) {
    const ScoreFunction score(v, params);
    std::set<int> ratings;
    bool repetitive = false;
    int non_negative = 0;
    for (size_t s = 0; s < score.spans().size(); ++s) {
      ratings.insert(score.spans()[s].rating);
      repetitive = repetitive || score.spans()[s].repetitive;
      if (score.spans()[s].rating >= 0)
        non_negative += score.spans()[s].length();
    }
    for (double pct : config.sanity_budgets) {
      GtSanityRow row;
      row.video_id = v.id;
      row.budget_pct = pct;
      row.budget = BudgetInSnippets(v, pct);
      row.constant_ratings = ratings.size() == 1 && !repetitive;
      row.saturated = row.budget >= non_negative;
      const ScoreBounds bounds = ComputeScoreBounds(score, row.budget);
      const uint64_t salt =
          StringSalt("sanity:" + v.id + ":" + std::to_string(row.budget));
      const GroundTruthPool pool =
          GenerateGroundTruth(score, row.budget, config.sanity_max_gt,
                              MixSeed(master_seed, salt), v.id);
      row.pool_size = static_cast<int>(pool.summaries.size());
      std::vector<double> gt_norm;
      double raw_min = std::numeric_limits<double>::infinity();
      double raw_max = -raw_min;
      for (const auto& y : pool.summaries) {
        const double s = score.Score(y);
        raw_min = std::min(raw_min, s);
        raw_max = std::max(raw_max, s);
        gt_norm.push_back(NormalizedScore(s, bounds));
      }
      row.all_tie =
          raw_max - raw_min <=
          1e-9 * std::max(1.0, std::max(std::abs(raw_min), std::abs(raw_max)));
      row.gt = Stat::Of(gt_norm);
      row.gt_min = *std::min_element(gt_norm.begin(), gt_norm.end());
      row.gt_max = *std::max_element(gt_norm.begin(), gt_norm.end());

      std::vector<double> rand_norm;
      double rand_raw_max = -std::numeric_limits<double>::infinity();
      for (int s = 0; s < config.sanity_randoms; ++s) {
        const std::vector<int> y = SampleRandomSummary(
            score, row.budget, RandomSummaryMode::kPositiveOnly,
            MixSeed(MixSeed(master_seed, salt ^ 0x72616e64), s));
        const double raw = score.Score(y);
        rand_raw_max = std::max(rand_raw_max, raw);
        rand_norm.push_back(NormalizedScore(raw, bounds));
      }
      row.random = Stat::Of(rand_norm);
      row.random_max = *std::max_element(rand_norm.begin(), rand_norm.end());
      row.dominates = rand_raw_max < raw_min;

      const bool flagged = row.constant_ratings || row.saturated;
      if (!row.all_tie) ++result.tie_failures;
      if (flagged) {
        ++result.flagged;
      } else if (!row.dominates) {
        ++result.dominance_failures;
      }
      ReportRow r{v.id + " @" + std::to_string(static_cast<int>(pct)) + "%",
                  {row.gt, row.random},
                  ""};
      if (!row.all_tie) r.flag = "pool scores differ";
      if (!row.dominates) {
        r.flag = flagged ? "random ties ground truth (flagged)"
                         : "random reaches ground truth";
      }
      table.rows.push_back(r);
      result.rows.push_back(row);
    }
  }
  table.notes.push_back(std::to_string(config.sanity_randoms) +
                        " positive-only random summaries per row");
  return result;
}

}  // namespace vsumm
