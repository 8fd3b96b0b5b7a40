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

// Experiment suites over an annotated corpus: baselines, cross-domain
// transfer, the ground-truth ablation and the ground-truth sanity sweep.
//
// A master seed fixes the train/test split of every domain, the ground-truth
// pools, the training order and the random baselines.

#ifndef VSUMM_EXPERIMENTS_H_
#define VSUMM_EXPERIMENTS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vsumm/corpus.h"
#include "vsumm/functions.h"
#include "vsumm/learn.h"
#include "vsumm/report.h"

namespace vsumm {

struct ExperimentConfig {
  double budget_pct = 15.0;
  double train_fraction = 0.7;
  int random_seeds = 100;
  TrainingConfig training;
  std::vector<ComponentSpec> grid;  // empty: default grid of the corpus
  std::vector<double> sanity_budgets{5.0, 15.0, 30.0};
  int sanity_randoms = 1000;
  int sanity_max_gt = 100;

  void Validate() const;
};

// The file may hold any subset of the fields; "training" and "grid" use the
// model-config and grid-file layouts.
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);
void SaveExperimentConfig(const std::filesystem::path& path,
                          const ExperimentConfig& config);

// Domains in order of first appearance.
std::vector<std::string> DomainsOf(std::span<const AnnotatedVideo> videos);

struct DomainSplit {
  std::vector<const AnnotatedVideo*> train;
  std::vector<const AnnotatedVideo*> test;
};

// Seeded shuffle, then the first round(fraction * n) videos (at least one,
// and at least one left for testing when n >= 2) train.
DomainSplit SplitDomain(std::span<const AnnotatedVideo> videos,
                        const std::string& domain, double train_fraction,
                        uint64_t master_seed);

// The training config of `config` with its seed and budget set for a run.
TrainingConfig RunTrainingConfig(const ExperimentConfig& config,
                                 uint64_t master_seed);

std::vector<ComponentSpec> ResolveGrid(const ExperimentConfig& config,
                                       std::span<const AnnotatedVideo> videos);

TrainingResult TrainDomainModel(std::span<const AnnotatedVideo> videos,
                                const DomainSplit& split,
                                const std::string& domain, ModelVariant variant,
                                const ExperimentConfig& config,
                                uint64_t master_seed);

// Per-video ScoreLoss of the model's summaries.
std::vector<double> TestLosses(const MixtureModel& model,
                               std::span<const AnnotatedVideo* const> test,
                               double budget_pct, const MeasureParams& params);

struct BaselineResult {
  ReportTable table;
  std::map<std::string, double> mean_loss;     // by method label
  std::map<std::string, MixtureModel> models;  // trained variants
  std::string best_component;
};

inline constexpr char kMethodFull[] = "Full";
inline constexpr char kMethodModular[] = "All-Modular";
inline constexpr char kMethodSubmodular[] = "All-Submodular";
inline constexpr char kMethodRandom[] = "Random";
inline constexpr char kMethodUniform[] = "Uniform";
inline constexpr char kMethodBestComponent[] = "Best-Component";
inline constexpr char kMethodAverageComponent[] = "Average-Component";

BaselineResult RunBaselines(std::span<const AnnotatedVideo> videos,
                            const std::string& domain,
                            const ExperimentConfig& config,
                            uint64_t master_seed);

struct CrossDomainResult {
  ReportTable table;
  std::vector<std::string> domains;
  Eigen::MatrixXd loss;  // [trained on][tested on]
  std::vector<bool> diagonal_minimal;
};

// `full_models` (by domain) skips training when given.
CrossDomainResult RunCrossDomain(
    std::span<const AnnotatedVideo> videos,
    std::span<const std::string> domains, const ExperimentConfig& config,
    uint64_t master_seed,
    const std::map<std::string, MixtureModel>* full_models = nullptr);

struct GtAblationResult {
  ReportTable table;
  double random_gt_loss = 0.0;
  double fixed_gt_loss = 0.0;
};

GtAblationResult RunGtAblation(std::span<const AnnotatedVideo> videos,
                               const std::string& domain,
                               const ExperimentConfig& config,
                               uint64_t master_seed,
                               const MixtureModel* random_gt_model = nullptr);

struct GtSanityRow {
  std::string video_id;
  double budget_pct = 0.0;
  int budget = 0;
  int pool_size = 0;
  Stat gt;      // normalized scores of pool members
  Stat random;  // normalized scores of positive-only random summaries
  double gt_min = 0.0;
  double gt_max = 0.0;
  double random_max = 0.0;
  bool all_tie = true;            // raw scores equal to 1e-9 relative
  bool constant_ratings = false;  // flagged rather than failed
  // Every non-negative snippet fits the budget, so random summaries drawn
  // from them can equal the pool; flagged rather than failed.
  bool saturated = false;
  bool dominates = true;  // every random strictly below the pool
};

struct GtSanityResult {
  ReportTable table;
  std::vector<GtSanityRow> rows;
  int tie_failures = 0;
  int dominance_failures = 0;  // among rows not flagged
  int flagged = 0;
};

GtSanityResult RunGtSanity(std::span<const AnnotatedVideo> videos,
                           const ExperimentConfig& config,
                           uint64_t master_seed);

}  // namespace vsumm

#endif  // VSUMM_EXPERIMENTS_H_
