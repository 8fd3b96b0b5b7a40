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

// Max-margin learning of mixture weights and inference with a learned model.
//
// For a video and a summary y the joint feature vector is
//
//   f(y) = [ sum_{x in y} phi(x) ; f_1(y) ; ... ; f_m(y) ]
//
// and a model scores y as w . f(y) with w = [w1 ; w2], w2 >= 0. Training
// minimizes the average structured hinge loss
//
//   L(w) = max_y ( w . f(y) + margin(y) ) - w . f(y_gt)
//
// plus (lambda1 / 2) |w1|^2 + (lambda2 / 2) |w2|^2, where margin(y) is
// 1 - normalized score and the max is approximated by greedy selection of
// exactly `budget` snippets.

#ifndef VSUMM_LEARN_H_
#define VSUMM_LEARN_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "vsumm/corpus.h"
#include "vsumm/functions.h"
#include "vsumm/gtgen.h"
#include "vsumm/measure.h"

namespace vsumm {

enum class OptimizerKind { kAdaGrad, kSgd };
const char* OptimizerKindName(OptimizerKind kind);
OptimizerKind ParseOptimizerKind(const std::string& name);

// kRandom draws a uniformly random pool member per video per epoch; kFixed
// always uses the pool's first member.
enum class GtMode { kRandom, kFixed };
const char* GtModeName(GtMode mode);
GtMode ParseGtMode(const std::string& name);

// kNone uses raw feature values. kBudget divides the modular block by the
// budget and each component by its value on the component's own greedy
// summary of `budget` snippets, which puts every coordinate of f(y) on a
// comparable, label-free per-video scale.
enum class FeatureScaling { kNone, kBudget };
const char* FeatureScalingName(FeatureScaling scaling);
FeatureScaling ParseFeatureScaling(const std::string& name);

struct TrainingConfig {
  OptimizerKind optimizer = OptimizerKind::kAdaGrad;
  double learning_rate = 0.05;
  double adagrad_epsilon = 1e-8;
  int epochs = 100;
  double lambda1 = 0.01;
  double lambda2 = 0.01;
  double budget_pct = 15.0;
  GtMode gt_mode = GtMode::kRandom;
  int max_gt = kDefaultMaxGroundTruths;
  uint64_t seed = 0;
  FeatureScaling scaling = FeatureScaling::kBudget;
  MeasureParams measure;

  void Validate() const;
};

// Missing fields keep their defaults.
nlohmann::json TrainingConfigToJson(const TrainingConfig& config);
TrainingConfig TrainingConfigFromJson(const nlohmann::json& j);

// Which blocks of the grid a model uses.
enum class ModelVariant { kFull, kModularOnly, kComponentsOnly };
const char* ModelVariantName(ModelVariant variant);
ModelVariant ParseModelVariant(const std::string& name);

struct MixtureModel {
  std::string domain;
  std::vector<std::string> modular_families;
  std::vector<int> modular_dims;          // columns per family
  std::vector<ComponentSpec> components;  // non-modular grid entries
  Eigen::VectorXd w1;
  Eigen::VectorXd w2;
  TrainingConfig config;

  int modular_size() const { return static_cast<int>(w1.size()); }
  int component_count() const { return static_cast<int>(components.size()); }
};

// Lays out a zero model for `domain` from the grid entries enabled for it.
// Feature dimensions are read from `reference`. w2 starts at 1/m.
MixtureModel InitModel(std::span<const ComponentSpec> grid,
                       const AnnotatedVideo& reference,
                       const std::string& domain, ModelVariant variant,
                       const TrainingConfig& config);

void SaveModel(const std::filesystem::path& path, const MixtureModel& model);
MixtureModel LoadModel(const std::filesystem::path& path);

// The instantiated components and feature blocks of one video for one
// model layout and budget.
class VideoFeatures {
 public:
  VideoFeatures(const MixtureModel& model, const AnnotatedVideo& video,
                int budget);

  const AnnotatedVideo& video() const { return *video_; }
  int budget() const { return budget_; }
  int size() const { return video_->n_snippets; }
  int dimension() const { return modular_dim_ + component_count(); }
  int component_count() const { return static_cast<int>(components_.size()); }
  const SetFunction& component(int i) const { return *components_[i]; }
  double component_scale(int i) const { return scales_[i]; }
  // Scaled modular features, one row per snippet.
  const Eigen::MatrixXd& phi() const { return phi_; }

  // f(y) as defined above, scaling included.
  Eigen::VectorXd JointFeatures(std::span<const int> y) const;

  // w . f(y) assembled as a set function (zero-weight terms skipped).
  std::unique_ptr<MixtureFunction> Objective(const MixtureModel& model) const;

 private:
  const AnnotatedVideo* video_;
  int budget_;
  int modular_dim_;
  Eigen::MatrixXd phi_;
  std::vector<std::unique_ptr<SetFunction>> components_;
  std::vector<double> scales_;
};

// w1 . sum phi(y) + sum_i w2_i f_i(y).
double MixtureValue(const MixtureModel& model, const VideoFeatures& features,
                    std::span<const int> y);
double MixtureValue(const MixtureModel& model, const AnnotatedVideo& video,
                    std::span<const int> y, int budget);

// -S(y) / (s_max - s_min): the part of 1 - normalized score that depends on
// y, without clipping (inactive for |y| <= budget).
class MarginFunction : public SetFunction {
 public:
  MarginFunction(std::shared_ptr<const ScoreFunction> score,
                 const ScoreBounds& bounds);
  FunctionClass function_class() const override {
    return FunctionClass::kGeneral;
  }
  bool is_monotone() const override { return false; }
  std::unique_ptr<SetFunction> Clone() const override;
  // Offset such that offset + Evaluate(y) = 1 - (S(y) - s_min) / range.
  double offset() const { return offset_; }

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  std::shared_ptr<const ScoreFunction> score_;
  ScoreState state_;
  double scale_;
  double offset_;
};

// Everything training needs about one annotated video.
struct TrainingExample {
  const AnnotatedVideo* video = nullptr;
  std::shared_ptr<const ScoreFunction> score;
  ScoreBounds bounds;
  GroundTruthPool pool;
  std::unique_ptr<VideoFeatures> features;
  std::map<int, Eigen::VectorXd> gt_features;  // by pool index
};

TrainingExample MakeTrainingExample(const MixtureModel& model,
                                    const AnnotatedVideo& video,
                                    const TrainingConfig& config,
                                    uint64_t pool_seed);

// Greedy maximizer of w . f(y) + margin(y) with |y| = budget.
std::vector<int> LossAugmentedInference(const MixtureModel& model,
                                        const TrainingExample& example);

struct HingeResult {
  double loss = 0.0;       // clamped at 0
  double raw = 0.0;        // before clamping
  bool violation = false;  // raw < 0: greedy missed the true max
  std::vector<int> argmax;
  double argmax_margin = 0.0;  // 1 - normalized score of argmax
  Eigen::VectorXd argmax_features;
};

HingeResult HingeLoss(const MixtureModel& model, TrainingExample& example,
                      int gt_index);

struct TrainingRecord {
  std::vector<double> epoch_hinge;    // mean clamped hinge per epoch
  std::vector<double> epoch_heldout;  // mean held-out ScoreLoss (NaN if none)
  std::vector<int> epoch_violations;
  std::vector<double> epoch_min_w2;
  int total_violations = 0;
  Eigen::VectorXd final_w1;
  Eigen::VectorXd final_w2;
};

struct TrainingResult {
  MixtureModel model;
  TrainingRecord record;
};

// Trains `model` (taken as the initial point) on `train`; ScoreLoss on
// `heldout` is recorded per epoch when non-empty.
TrainingResult Train(MixtureModel model,
                     std::span<const AnnotatedVideo* const> train,
                     std::span<const AnnotatedVideo* const> heldout,
                     const TrainingConfig& config);

struct ComponentContribution {
  std::string id;
  double weight = 0.0;
  double value = 0.0;  // scaled f_i(y)
  double contribution = 0.0;
};

struct SummaryReport {
  std::string video_id;
  int budget = 0;
  std::vector<int> snippets;  // sorted
  double mixture_value = 0.0;
  double score = 0.0;
  double normalized_score = 0.0;
  double score_loss = 0.0;
  ScoreBounds bounds;
  std::vector<ComponentContribution> contributions;  // modular block first
  std::string guarantee;
};

// kGreedy fills the budget with (lazy where valid) greedy. The other two
// are the case-specific maximizers used for bound checks; they may return
// fewer than `budget` snippets.
enum class InferenceAlgorithm { kGreedy, kBestOfTwo, kRandomizedGreedy };
const char* InferenceAlgorithmName(InferenceAlgorithm algorithm);
InferenceAlgorithm ParseInferenceAlgorithm(const std::string& name);

struct InferenceOptions {
  InferenceAlgorithm algorithm = InferenceAlgorithm::kGreedy;
  uint64_t seed = 0;  // randomized algorithms only
};

// Maximizes the model's mixture under the budget, then scores the result
// against the video's ratings.
SummaryReport SummarizeVideo(const MixtureModel& model,
                             const AnnotatedVideo& video, double budget_pct,
                             const MeasureParams& params,
                             const InferenceOptions& options = {});
SummaryReport SummarizeVideo(const MixtureModel& model,
                             const VideoFeatures& features,
                             const ScoreFunction& score,
                             const ScoreBounds& bounds,
                             const InferenceOptions& options = {});

// Score report for an externally chosen summary.
SummaryReport ScoreSummary(const AnnotatedVideo& video,
                           std::span<const int> snippets, int budget,
                           const MeasureParams& params);

}  // namespace vsumm

#endif  // VSUMM_LEARN_H_
