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

#include "vsumm/learn.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include <nlohmann/json.hpp>

#include "vsumm/error.h"
#include "vsumm/optimize.h"
#include "vsumm/random.h"

namespace vsumm {
namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

json TrainingConfigToJson(const TrainingConfig& c) {
  return json{{"optimizer", OptimizerKindName(c.optimizer)},
              {"learning_rate", c.learning_rate},
              {"adagrad_epsilon", c.adagrad_epsilon},
              {"epochs", c.epochs},
              {"lambda1", c.lambda1},
              {"lambda2", c.lambda2},
              {"budget_pct", c.budget_pct},
              {"gt_mode", GtModeName(c.gt_mode)},
              {"max_gt", c.max_gt},
              {"seed", c.seed},
              {"scaling", FeatureScalingName(c.scaling)},
              {"measure",
               {{"alpha", c.measure.alpha},
                {"beta_sec", c.measure.beta_sec},
                {"penalty", c.measure.penalty}}}};
}

TrainingConfig TrainingConfigFromJson(const json& j) {
  TrainingConfig c;
  c.optimizer = ParseOptimizerKind(
      j.value("optimizer", std::string(OptimizerKindName(c.optimizer))));
  c.learning_rate = j.value("learning_rate", c.learning_rate);
  c.adagrad_epsilon = j.value("adagrad_epsilon", c.adagrad_epsilon);
  c.epochs = j.value("epochs", c.epochs);
  c.lambda1 = j.value("lambda1", c.lambda1);
  c.lambda2 = j.value("lambda2", c.lambda2);
  c.budget_pct = j.value("budget_pct", c.budget_pct);
  c.gt_mode = ParseGtMode(j.value("gt_mode", std::string("random")));
  c.max_gt = j.value("max_gt", c.max_gt);
  c.seed = j.value("seed", c.seed);
  c.scaling = ParseFeatureScaling(j.value("scaling", std::string("budget")));
  if (j.contains("measure")) {
    const json& m = j.at("measure");
    c.measure.alpha = m.value("alpha", c.measure.alpha);
    c.measure.beta_sec = m.value("beta_sec", c.measure.beta_sec);
    c.measure.penalty = m.value("penalty", c.measure.penalty);
  }
  return c;
}

const char* OptimizerKindName(OptimizerKind kind) {
  return kind == OptimizerKind::kAdaGrad ? "adagrad" : "sgd";
}

OptimizerKind ParseOptimizerKind(const std::string& name) {
  if (name == "adagrad") return OptimizerKind::kAdaGrad;
  if (name == "sgd") return OptimizerKind::kSgd;
  throw Error("unknown optimizer: " + name);
}

const char* GtModeName(GtMode mode) {
  return mode == GtMode::kRandom ? "random" : "fixed";
}

GtMode ParseGtMode(const std::string& name) {
  if (name == "random") return GtMode::kRandom;
  if (name == "fixed") return GtMode::kFixed;
  throw Error("unknown gt mode: " + name);
}

const char* FeatureScalingName(FeatureScaling scaling) {
  return scaling == FeatureScaling::kNone ? "none" : "budget";
}

FeatureScaling ParseFeatureScaling(const std::string& name) {
  if (name == "none") return FeatureScaling::kNone;
  if (name == "budget") return FeatureScaling::kBudget;
  throw Error("unknown feature scaling: " + name);
}

const char* ModelVariantName(ModelVariant variant) {
  switch (variant) {
    case ModelVariant::kFull:
      return "full";
    case ModelVariant::kModularOnly:
      return "all-modular";
    case ModelVariant::kComponentsOnly:
      return "all-submodular";
  }
  return "full";
}

ModelVariant ParseModelVariant(const std::string& name) {
  if (name == "full") return ModelVariant::kFull;
  if (name == "all-modular") return ModelVariant::kModularOnly;
  if (name == "all-submodular") return ModelVariant::kComponentsOnly;
  throw Error("unknown model variant: " + name);
}

void TrainingConfig::Validate() const {
  if (!(learning_rate > 0.0)) throw Error("learning rate must be > 0");
  if (epochs < 0) throw Error("epochs must be >= 0");
  if (lambda1 < 0.0 || lambda2 < 0.0) {
    throw Error("regularization weights must be >= 0");
  }
  if (!(budget_pct > 0.0 && budget_pct <= 100.0)) {
    throw Error("budget_pct must be in (0, 100]");
  }
  if (max_gt < 1) throw Error("max_gt must be >= 1");
  measure.Validate();
}

MixtureModel InitModel(std::span<const ComponentSpec> grid,
                       const AnnotatedVideo& reference,
                       const std::string& domain, ModelVariant variant,
                       const TrainingConfig& config) {
  MixtureModel model;
  model.domain = domain;
  model.config = config;
  int dim = 0;
  for (const ComponentSpec& spec : grid) {
    if (!spec.EnabledFor(domain)) continue;
    if (spec.kind == ComponentKind::kModular) {
      if (variant == ModelVariant::kComponentsOnly) continue;
      auto it = reference.features.find(spec.feature);
      if (it == reference.features.end()) {
        throw Error("modular family '" + spec.feature + "' missing in video '" +
                    reference.id + "'");
      }
      model.modular_families.push_back(spec.feature);
      model.modular_dims.push_back(it->second.cols());
      dim += it->second.cols();
    } else {
      if (variant == ModelVariant::kModularOnly) continue;
      CheckComponentSpec(spec, reference);
      model.components.push_back(spec);
    }
  }
  if (dim == 0 && model.components.empty()) {
    throw Error("model for domain '" + domain + "' has no terms");
  }
  model.w1 = Eigen::VectorXd::Zero(dim);
  const int m = model.component_count();
  model.w2 = m > 0 ? Eigen::VectorXd::Constant(m, 1.0 / m) : Eigen::VectorXd(0);
  return model;
}

void SaveModel(const std::filesystem::path& path, const MixtureModel& model) {
  json modular = json::array();
  int offset = 0;
  for (size_t f = 0; f < model.modular_families.size(); ++f) {
    const int d = model.modular_dims[f];
    std::vector<double> w(model.w1.data() + offset,
                          model.w1.data() + offset + d);
    modular.push_back({{"family", model.modular_families[f]}, {"weights", w}});
    offset += d;
  }
  json components = json::array();
  for (int i = 0; i < model.component_count(); ++i) {
    const ComponentSpec& s = model.components[i];
    json c = ComponentSpecToJson(s);
    c["id"] = s.Id();
    c["weight"] = model.w2[i];
    components.push_back(c);
  }
  json doc{{"format", "vsumm-model"},
           {"version", 1},
           {"domain", model.domain},
           {"w1", modular},
           {"w2", components},
           {"config", TrainingConfigToJson(model.config)}};
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write model file: " + path.string());
  out << doc.dump(2) << "\n";
}

MixtureModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file: " + path.string());
  try {
    const json doc = json::parse(in);
    if (doc.value("format", std::string()) != "vsumm-model") {
      throw Error("not a model file: " + path.string());
    }
    MixtureModel model;
    model.domain = doc.at("domain").get<std::string>();
    std::vector<double> w1;
    for (const json& f : doc.at("w1")) {
      const auto w = f.at("weights").get<std::vector<double>>();
      model.modular_families.push_back(f.at("family").get<std::string>());
      model.modular_dims.push_back(static_cast<int>(w.size()));
      w1.insert(w1.end(), w.begin(), w.end());
    }
    model.w1 = Eigen::Map<const Eigen::VectorXd>(w1.data(), w1.size());
    std::vector<double> w2;
    for (const json& c : doc.at("w2")) {
      const ComponentSpec s = ComponentSpecFromJson(c);
      const double w = c.at("weight").get<double>();
      if (w < 0.0) throw Error("negative component weight in model file");
      model.components.push_back(s);
      w2.push_back(w);
    }
    model.w2 = Eigen::Map<const Eigen::VectorXd>(w2.data(), w2.size());
    if (doc.contains("config"))
      model.config = TrainingConfigFromJson(doc.at("config"));
    return model;
  } catch (const json::exception& e) {
    throw Error("malformed model file " + path.string() + ": " + e.what());
  }
}

// --- VideoFeatures ----------------------------------------------------------

VideoFeatures::VideoFeatures(const MixtureModel& model,
                             const AnnotatedVideo& video, int budget)
    : video_(&video), budget_(budget), modular_dim_(model.modular_size()) {
  if (budget < 1 || budget > video.n_snippets) {
    throw Error("budget " + std::to_string(budget) + " outside [1, " +
                std::to_string(video.n_snippets) + "]");
  }
  const bool scaled = model.config.scaling == FeatureScaling::kBudget;
  if (modular_dim_ > 0) {
    phi_ = ModularFeatureMatrix(video, model.modular_families);
    if (phi_.cols() != modular_dim_) {
      throw Error("video '" + video.id + "' modular dimension " +
                  std::to_string(phi_.cols()) + " does not match model " +
                  std::to_string(modular_dim_));
    }
    if (scaled) phi_ /= budget;
  } else {
    phi_ = Eigen::MatrixXd::Zero(video.n_snippets, 0);
  }
  GroundSetContext context(video);
  for (const ComponentSpec& spec : model.components) {
    components_.push_back(InstantiateComponent(spec, context));
    double scale = 1.0;
    if (scaled) {
      std::unique_ptr<SetFunction> probe = components_.back()->Clone();
      GreedyOptions options;
      options.fill_budget = true;
      const double reference =
          std::abs(GreedyMax(*probe, budget, options).value);
      if (reference > 1e-12) scale = 1.0 / reference;
    }
    scales_.push_back(scale);
  }
}

Eigen::VectorXd VideoFeatures::JointFeatures(std::span<const int> y) const {
  Eigen::VectorXd f(dimension());
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(modular_dim_);
  for (int i : y) {
    if (i < 0 || i >= size()) throw Error("snippet index out of range");
    sum += phi_.row(i).transpose();
  }
  f.head(modular_dim_) = sum;
  for (int c = 0; c < component_count(); ++c) {
    f[modular_dim_ + c] = scales_[c] * components_[c]->Evaluate(y);
  }
  return f;
}

std::unique_ptr<MixtureFunction> VideoFeatures::Objective(
    const MixtureModel& model) const {
  if (model.modular_size() != modular_dim_ ||
      model.component_count() != component_count()) {
    throw Error("model layout does not match the video features");
  }
  auto f = std::make_unique<MixtureFunction>(size());
  if (modular_dim_ > 0 && model.w1.squaredNorm() > 0.0) {
    f->AddTerm(std::make_unique<ModularFunction>(phi_ * model.w1), 1.0,
               "modular");
  }
  for (int c = 0; c < component_count(); ++c) {
    const double w = model.w2[c];
    if (w < 0.0) throw Error("component weights must be >= 0");
    if (w == 0.0) continue;
    f->AddTerm(components_[c]->Clone(), w * scales_[c],
               model.components[c].Id());
  }
  return f;
}

double MixtureValue(const MixtureModel& model, const VideoFeatures& features,
                    std::span<const int> y) {
  Eigen::VectorXd w(features.dimension());
  w << model.w1, model.w2;
  return w.dot(features.JointFeatures(y));
}

double MixtureValue(const MixtureModel& model, const AnnotatedVideo& video,
                    std::span<const int> y, int budget) {
  return MixtureValue(model, VideoFeatures(model, video, budget), y);
}

// --- MarginFunction
// -----------------------------------------------------------

MarginFunction::MarginFunction(std::shared_ptr<const ScoreFunction> score,
                               const ScoreBounds& bounds)
    : SetFunction(score->n_snippets()),
      score_(std::move(score)),
      state_(*score_) {
  const double range = bounds.s_max - bounds.s_min;
  if (!(range > 0.0)) throw Error("degenerate score range");
  scale_ = 1.0 / range;
  offset_ = 1.0 + bounds.s_min * scale_;
}

std::unique_ptr<SetFunction> MarginFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new MarginFunction(*this));
}

double MarginFunction::DoEvaluate(std::span<const int> x) const {
  return -scale_ * score_->Score(x);
}

double MarginFunction::DoGain(int e) const { return -scale_ * state_.Gain(e); }

void MarginFunction::DoAdd(int e) { state_.Add(e); }

void MarginFunction::DoReset() { state_.Reset(); }

// --- Training
// -----------------------------------------------------------------

TrainingExample MakeTrainingExample(const MixtureModel& model,
                                    const AnnotatedVideo& video,
                                    const TrainingConfig& config,
                                    uint64_t pool_seed) {
  TrainingExample ex;
  ex.video = &video;
  ex.score = std::make_shared<const ScoreFunction>(video, config.measure);
  const int budget = BudgetInSnippets(video, config.budget_pct);
  ex.bounds = ComputeScoreBounds(*ex.score, budget);
  ex.pool = GenerateGroundTruth(*ex.score, budget, config.max_gt, pool_seed,
                                video.id);
  ex.features = std::make_unique<VideoFeatures>(model, video, budget);
  return ex;
}

std::vector<int> LossAugmentedInference(const MixtureModel& model,
                                        const TrainingExample& example) {
  std::unique_ptr<MixtureFunction> f = example.features->Objective(model);
  f->AddTerm(std::make_unique<MarginFunction>(example.score, example.bounds),
             1.0, "margin");
  GreedyOptions options;
  options.fill_budget = true;
  return GreedyMax(*f, example.features->budget(), options).selected;
}

HingeResult HingeLoss(const MixtureModel& model, TrainingExample& example,
                      int gt_index) {
  if (gt_index < 0 ||
      gt_index >= static_cast<int>(example.pool.summaries.size())) {
    throw Error("ground-truth index out of range");
  }
  auto it = example.gt_features.find(gt_index);
  if (it == example.gt_features.end()) {
    it = example.gt_features
             .emplace(gt_index, example.features->JointFeatures(
                                    example.pool.summaries[gt_index]))
             .first;
  }
  Eigen::VectorXd w(example.features->dimension());
  w << model.w1, model.w2;

  HingeResult h;
  h.argmax = LossAugmentedInference(model, example);
  h.argmax_features = example.features->JointFeatures(h.argmax);
  h.argmax_margin = MarginLoss(example.score->Score(h.argmax), example.bounds);
  h.raw = w.dot(h.argmax_features) + h.argmax_margin - w.dot(it->second);
  h.violation = h.raw < 0.0;
  h.loss = std::max(0.0, h.raw);
  return h;
}

TrainingResult Train(MixtureModel model,
                     std::span<const AnnotatedVideo* const> train,
                     std::span<const AnnotatedVideo* const> heldout,
                     const TrainingConfig& config) {
  config.Validate();
  if (train.empty()) throw Error("training needs at least one video");
  model.config = config;
  const int d1 = model.modular_size();
  const int dim = d1 + model.component_count();

  std::vector<TrainingExample> examples;
  for (size_t i = 0; i < train.size(); ++i) {
    examples.push_back(MakeTrainingExample(model, *train[i], config,
                                           MixSeed(config.seed, 0x6774 + i)));
    if (examples.back().pool.summaries.empty()) {
      throw Error("no ground truth for video '" + train[i]->id + "'");
    }
  }
  struct Heldout {
    std::unique_ptr<VideoFeatures> features;
    std::unique_ptr<ScoreFunction> score;
    ScoreBounds bounds;
  };
  std::vector<Heldout> held;
  for (const AnnotatedVideo* v : heldout) {
    Heldout h;
    const int budget = BudgetInSnippets(*v, config.budget_pct);
    h.score = std::make_unique<ScoreFunction>(*v, config.measure);
    h.bounds = ComputeScoreBounds(*h.score, budget);
    h.features = std::make_unique<VideoFeatures>(model, *v, budget);
    held.push_back(std::move(h));
  }

  Eigen::VectorXd w(dim);
  w << model.w1, model.w2;
  Eigen::VectorXd lambda(dim);
  lambda.head(d1).setConstant(config.lambda1);
  lambda.tail(dim - d1).setConstant(config.lambda2);
  Eigen::VectorXd accumulated = Eigen::VectorXd::Zero(dim);

  Rng rng(MixSeed(config.seed, 0x7472));
  std::vector<int> order(examples.size());
  std::iota(order.begin(), order.end(), 0);

  TrainingResult result;
  TrainingRecord& record = result.record;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    Shuffle(order, rng);
    double hinge_sum = 0.0;
    int violations = 0;
    for (int idx : order) {
      TrainingExample& ex = examples[idx];
      const int pool_size = static_cast<int>(ex.pool.summaries.size());
      const int drawn = static_cast<int>(UniformIndex(rng, pool_size));
      const int gt = config.gt_mode == GtMode::kRandom ? drawn : 0;

      model.w1 = w.head(d1);
      model.w2 = w.tail(dim - d1);
      const HingeResult h = HingeLoss(model, ex, gt);
      hinge_sum += h.loss;
      if (h.violation) ++violations;

      Eigen::VectorXd g = lambda.cwiseProduct(w);
      if (h.raw > 0.0) g += h.argmax_features - ex.gt_features.at(gt);
      if (config.optimizer == OptimizerKind::kAdaGrad) {
        accumulated += g.cwiseAbs2();
        w -= (config.learning_rate * g.array() /
              (accumulated.array() + config.adagrad_epsilon).sqrt())
                 .matrix();
      } else {
        w -= config.learning_rate * g;
      }
      w.tail(dim - d1) = w.tail(dim - d1).cwiseMax(0.0);
    }
    model.w1 = w.head(d1);
    model.w2 = w.tail(dim - d1);
    record.epoch_hinge.push_back(hinge_sum / examples.size());
    record.epoch_violations.push_back(violations);
    record.total_violations += violations;
    record.epoch_min_w2.push_back(
        model.component_count() > 0 ? model.w2.minCoeff() : 0.0);
    if (held.empty()) {
      record.epoch_heldout.push_back(kNaN);
    } else {
      double loss = 0.0;
      for (const Heldout& h : held) {
        loss +=
            SummarizeVideo(model, *h.features, *h.score, h.bounds).score_loss;
      }
      record.epoch_heldout.push_back(loss / held.size());
    }
  }
  model.w1 = w.head(d1);
  model.w2 = w.tail(dim - d1);
  record.final_w1 = model.w1;
  record.final_w2 = model.w2;
  result.model = std::move(model);
  return result;
}

// --- Inference
// ----------------------------------------------------------------

const char* InferenceAlgorithmName(InferenceAlgorithm algorithm) {
  switch (algorithm) {
    case InferenceAlgorithm::kGreedy:
      return "greedy";
    case InferenceAlgorithm::kBestOfTwo:
      return "best-of-two";
    case InferenceAlgorithm::kRandomizedGreedy:
      return "randomized-greedy";
  }
  return "?";
}

InferenceAlgorithm ParseInferenceAlgorithm(const std::string& name) {
  for (InferenceAlgorithm a :
       {InferenceAlgorithm::kGreedy, InferenceAlgorithm::kBestOfTwo,
        InferenceAlgorithm::kRandomizedGreedy}) {
    if (name == InferenceAlgorithmName(a)) return a;
  }
  throw Error("unknown inference algorithm: " + name);
}

SummaryReport SummarizeVideo(const MixtureModel& model,
                             const VideoFeatures& features,
                             const ScoreFunction& score,
                             const ScoreBounds& bounds,
                             const InferenceOptions& options) {
  std::unique_ptr<MixtureFunction> f = features.Objective(model);
  const int budget = features.budget();
  std::vector<int> selected;
  switch (options.algorithm) {
    case InferenceAlgorithm::kGreedy: {
      GreedyOptions greedy;
      greedy.fill_budget = true;
      selected = GreedyMax(*f, budget, greedy).selected;
      break;
    }
    case InferenceAlgorithm::kBestOfTwo:
      selected = BestOfTwo(*f, budget, options.seed).selected;
      break;
    case InferenceAlgorithm::kRandomizedGreedy:
      selected = RandomizedGreedyMax(*f, budget, options.seed).selected;
      break;
  }

  SummaryReport r;
  r.video_id = features.video().id;
  r.budget = budget;
  r.snippets = std::move(selected);
  std::sort(r.snippets.begin(), r.snippets.end());
  r.mixture_value = MixtureValue(model, features, r.snippets);
  r.score = score.Score(r.snippets);
  r.bounds = bounds;
  r.normalized_score = NormalizedScore(r.score, bounds);
  r.score_loss = 1.0 - r.normalized_score;
  r.guarantee = ClassifyGuarantee(*f).description;

  const Eigen::VectorXd joint = features.JointFeatures(r.snippets);
  const int d1 = model.modular_size();
  if (d1 > 0) {
    ComponentContribution c;
    c.id = "modular";
    c.weight = 1.0;
    c.value = model.w1.dot(joint.head(d1));
    c.contribution = c.value;
    r.contributions.push_back(c);
  }
  for (int i = 0; i < model.component_count(); ++i) {
    ComponentContribution c;
    c.id = model.components[i].Id();
    c.weight = model.w2[i];
    c.value = joint[d1 + i];
    c.contribution = c.weight * c.value;
    r.contributions.push_back(c);
  }
  return r;
}

SummaryReport SummarizeVideo(const MixtureModel& model,
                             const AnnotatedVideo& video, double budget_pct,
                             const MeasureParams& params,
                             const InferenceOptions& options) {
  const int budget = BudgetInSnippets(video, budget_pct);
  const ScoreFunction score(video, params);
  const VideoFeatures features(model, video, budget);
  return SummarizeVideo(model, features, score,
                        ComputeScoreBounds(score, budget), options);
}

SummaryReport ScoreSummary(const AnnotatedVideo& video,
                           std::span<const int> snippets, int budget,
                           const MeasureParams& params) {
  const ScoreFunction score(video, params);
  SummaryReport r;
  r.video_id = video.id;
  r.budget = budget;
  r.snippets.assign(snippets.begin(), snippets.end());
  std::sort(r.snippets.begin(), r.snippets.end());
  r.score = score.Score(r.snippets);
  r.bounds = ComputeScoreBounds(score, budget);
  r.normalized_score = NormalizedScore(r.score, r.bounds);
  r.score_loss = 1.0 - r.normalized_score;
  return r;
}

}  // namespace vsumm
