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

#include "vsumm/functions.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "vsumm/error.h"

namespace vsumm {
namespace {

constexpr char kIndicesSource[] = "indices";

ComponentSpec MakeSpec(ComponentKind kind, const std::string& feature) {
  ComponentSpec spec;
  spec.kind = kind;
  spec.feature = feature;
  return spec;
}

void CheckIndices(std::span<const int> x, int n) {
  std::vector<char> seen(n, 0);
  for (int i : x) {
    if (i < 0 || i >= n) {
      throw Error("set element " + std::to_string(i) + " out of range [0, " +
                  std::to_string(n) + ")");
    }
    if (seen[i]) throw Error("set element " + std::to_string(i) + " repeated");
    seen[i] = 1;
  }
}

}  // namespace

const char* FunctionClassName(FunctionClass c) {
  switch (c) {
    case FunctionClass::kModular:
      return "modular";
    case FunctionClass::kMonotoneSubmodular:
      return "monotone-submodular";
    case FunctionClass::kSubmodular:
      return "submodular";
    case FunctionClass::kSupermodular:
      return "supermodular";
    case FunctionClass::kDispersion:
      return "dispersion";
    case FunctionClass::kGeneral:
      return "general";
  }
  return "general";
}

bool IsSubmodularClass(FunctionClass c) {
  return c == FunctionClass::kModular ||
         c == FunctionClass::kMonotoneSubmodular ||
         c == FunctionClass::kSubmodular;
}

// --- SetFunction ----------------------------------------------------------

SetFunction::SetFunction(int ground_size)
    : n_(ground_size), in_set_(ground_size, 0) {
  if (ground_size < 0) throw Error("negative ground set size");
}

bool SetFunction::is_monotone() const {
  const FunctionClass c = function_class();
  return c == FunctionClass::kMonotoneSubmodular ||
         c == FunctionClass::kSupermodular;
}

double SetFunction::Evaluate(std::span<const int> x) const {
  CheckIndices(x, n_);
  return DoEvaluate(x);
}

void SetFunction::Reset() {
  std::fill(in_set_.begin(), in_set_.end(), 0);
  selected_.clear();
  value_ = 0.0;
  DoReset();
}

double SetFunction::Gain(int e) const {
  if (e < 0 || e >= n_) throw Error("gain: element out of range");
  if (in_set_[e]) {
    throw Error("gain: element " + std::to_string(e) + " already selected");
  }
  return DoGain(e);
}

void SetFunction::Add(int e) {
  const double gain = Gain(e);
  DoAdd(e);
  in_set_[e] = 1;
  selected_.push_back(e);
  value_ += gain;
}

double MarginalGain(SetFunction& f, std::span<const int> x, int e) {
  f.Reset();
  for (int i : x) f.Add(i);
  return f.Gain(e);
}

// --- Set cover --------------------------------------------------------------

SetCoverFunction::SetCoverFunction(
    std::shared_ptr<const ConceptMatrix> concepts)
    : SetFunction(concepts->size()),
      concepts_(std::move(concepts)),
      mass_(Eigen::VectorXd::Zero(concepts_->concepts())) {}

std::unique_ptr<SetFunction> SetCoverFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new SetCoverFunction(*this));
}

double SetCoverFunction::DoEvaluate(std::span<const int> x) const {
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(concepts_->concepts());
  for (int i : x) mass += concepts_->values.row(i).transpose();
  return mass.cwiseMin(1.0).sum();
}

double SetCoverFunction::DoGain(int e) const {
  double gain = 0.0;
  const auto row = concepts_->values.row(e);
  for (int u = 0; u < mass_.size(); ++u) {
    if (row[u] == 0.0) continue;
    gain += std::min(mass_[u] + row[u], 1.0) - std::min(mass_[u], 1.0);
  }
  return gain;
}

void SetCoverFunction::DoAdd(int e) {
  mass_ += concepts_->values.row(e).transpose();
}

void SetCoverFunction::DoReset() { mass_.setZero(); }

// --- Probabilistic set cover ------------------------------------------------

ProbabilisticSetCoverFunction::ProbabilisticSetCoverFunction(
    std::shared_ptr<const ConceptMatrix> concepts)
    : SetFunction(concepts->size()),
      concepts_(std::move(concepts)),
      uncovered_(Eigen::VectorXd::Ones(concepts_->concepts())) {}

std::unique_ptr<SetFunction> ProbabilisticSetCoverFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new ProbabilisticSetCoverFunction(*this));
}

double ProbabilisticSetCoverFunction::DoEvaluate(std::span<const int> x) const {
  Eigen::VectorXd uncovered = Eigen::VectorXd::Ones(concepts_->concepts());
  for (int i : x) {
    uncovered = uncovered.cwiseProduct(
        (1.0 - concepts_->values.row(i).array()).matrix().transpose());
  }
  return (1.0 - uncovered.array()).sum();
}

double ProbabilisticSetCoverFunction::DoGain(int e) const {
  return uncovered_.dot(concepts_->values.row(e).transpose());
}

void ProbabilisticSetCoverFunction::DoAdd(int e) {
  uncovered_ = uncovered_.cwiseProduct(
      (1.0 - concepts_->values.row(e).array()).matrix().transpose());
}

void ProbabilisticSetCoverFunction::DoReset() { uncovered_.setOnes(); }

// --- Facility location ------------------------------------------------------

FacilityLocationFunction::FacilityLocationFunction(
    std::shared_ptr<const SimilarityMatrix> sim)
    : SetFunction(sim->size()),
      sim_(std::move(sim)),
      best_(Eigen::VectorXd::Zero(sim_->size())) {}

std::unique_ptr<SetFunction> FacilityLocationFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new FacilityLocationFunction(*this));
}

double FacilityLocationFunction::DoEvaluate(std::span<const int> x) const {
  if (x.empty()) return 0.0;
  const int n = sim_->size();
  double total = 0.0;
  for (int v = 0; v < n; ++v) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i : x) best = std::max(best, sim_->values(v, i));
    total += best;
  }
  return total;
}

double FacilityLocationFunction::DoGain(int e) const {
  // Column e equals row e; columns are contiguous.
  return (sim_->values.col(e) - best_).cwiseMax(0.0).sum();
}

void FacilityLocationFunction::DoAdd(int e) {
  best_ = best_.cwiseMax(sim_->values.col(e));
}

void FacilityLocationFunction::DoReset() { best_.setZero(); }

// --- Saturated coverage -----------------------------------------------------

SaturatedCoverageFunction::SaturatedCoverageFunction(
    std::shared_ptr<const SimilarityMatrix> sim, double fraction)
    : SetFunction(sim->size()),
      sim_(std::move(sim)),
      mass_(Eigen::VectorXd::Zero(sim_->size())) {
  if (!(fraction > 0.0)) throw Error("saturation fraction must be > 0");
  cap_ = fraction * sim_->values.rowwise().sum();
}

std::unique_ptr<SetFunction> SaturatedCoverageFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new SaturatedCoverageFunction(*this));
}

double SaturatedCoverageFunction::DoEvaluate(std::span<const int> x) const {
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(sim_->size());
  for (int i : x) mass += sim_->values.col(i);
  return mass.cwiseMin(cap_).sum();
}

double SaturatedCoverageFunction::DoGain(int e) const {
  return ((mass_ + sim_->values.col(e)).cwiseMin(cap_) - mass_.cwiseMin(cap_))
      .sum();
}

void SaturatedCoverageFunction::DoAdd(int e) { mass_ += sim_->values.col(e); }

void SaturatedCoverageFunction::DoReset() { mass_.setZero(); }

// --- Graph cut --------------------------------------------------------------

GraphCutFunction::GraphCutFunction(std::shared_ptr<const SimilarityMatrix> sim,
                                   double lambda)
    : SetFunction(sim->size()),
      sim_(std::move(sim)),
      lambda_(lambda),
      inner_(Eigen::VectorXd::Zero(sim_->size())) {
  if (lambda < 0.0) throw Error("graph cut lambda must be >= 0");
  column_sum_ = sim_->values.colwise().sum().transpose();
}

FunctionClass GraphCutFunction::function_class() const {
  return lambda_ <= 0.5 ? FunctionClass::kMonotoneSubmodular
                        : FunctionClass::kSubmodular;
}

std::unique_ptr<SetFunction> GraphCutFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new GraphCutFunction(*this));
}

double GraphCutFunction::DoEvaluate(std::span<const int> x) const {
  double cut = 0.0;
  double within = 0.0;
  for (int j : x) {
    cut += column_sum_[j];
    for (int i : x) within += sim_->values(i, j);
  }
  return cut - lambda_ * within;
}

double GraphCutFunction::DoGain(int e) const {
  return column_sum_[e] - lambda_ * (2.0 * inner_[e] + sim_->values(e, e));
}

void GraphCutFunction::DoAdd(int e) { inner_ += sim_->values.col(e); }

void GraphCutFunction::DoReset() { inner_.setZero(); }

// --- Disparity-min ----------------------------------------------------------

DisparityMinFunction::DisparityMinFunction(
    std::shared_ptr<const Eigen::MatrixXd> dist)
    : SetFunction(static_cast<int>(dist->rows())), dist_(std::move(dist)) {
  const int n = static_cast<int>(dist_->rows());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      max_distance_ = std::max(max_distance_, (*dist_)(i, j));
    }
  }
  nearest_ =
      Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
}

std::unique_ptr<SetFunction> DisparityMinFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new DisparityMinFunction(*this));
}

double DisparityMinFunction::DoEvaluate(std::span<const int> x) const {
  if (x.empty()) return 0.0;
  if (x.size() == 1) return max_distance_;
  double best = std::numeric_limits<double>::infinity();
  for (size_t a = 0; a < x.size(); ++a) {
    for (size_t b = a + 1; b < x.size(); ++b) {
      best = std::min(best, (*dist_)(x[a], x[b]));
    }
  }
  return best;
}

double DisparityMinFunction::DoGain(int e) const {
  if (count_ == 0) return max_distance_;
  if (count_ == 1) return nearest_[e] - max_distance_;
  return std::min(current_min_, nearest_[e]) - current_min_;
}

void DisparityMinFunction::DoAdd(int e) {
  if (count_ == 1) {
    current_min_ = nearest_[e];
  } else if (count_ >= 2) {
    current_min_ = std::min(current_min_, nearest_[e]);
  }
  nearest_ = nearest_.cwiseMin(dist_->col(e));
  ++count_;
}

void DisparityMinFunction::DoReset() {
  count_ = 0;
  current_min_ = 0.0;
  nearest_.setConstant(std::numeric_limits<double>::infinity());
}

// --- Continuity -------------------------------------------------------------

ContinuityFunction::ContinuityFunction(std::vector<ShotRange> shots,
                                       int n_snippets)
    : SetFunction(n_snippets),
      shots_(std::make_shared<const std::vector<ShotRange>>(std::move(shots))),
      pull_(Eigen::VectorXd::Zero(n_snippets)) {
  shot_of_ =
      std::make_shared<const std::vector<int>>(ShotIndex(*shots_, n_snippets));
}

std::unique_ptr<SetFunction> ContinuityFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new ContinuityFunction(*this));
}

double ContinuityFunction::DoEvaluate(std::span<const int> x) const {
  double total = 0.0;
  for (size_t a = 0; a < x.size(); ++a) {
    for (size_t b = a + 1; b < x.size(); ++b) {
      if ((*shot_of_)[x[a]] != (*shot_of_)[x[b]]) continue;
      total += 1.0 / (1.0 + std::abs(x[a] - x[b]));
    }
  }
  return total;
}

double ContinuityFunction::DoGain(int e) const { return pull_[e]; }

void ContinuityFunction::DoAdd(int e) {
  const ShotRange& shot = (*shots_)[(*shot_of_)[e]];
  for (int j = shot.begin; j < shot.end; ++j) {
    if (j != e) pull_[j] += 1.0 / (1.0 + std::abs(e - j));
  }
}

void ContinuityFunction::DoReset() { pull_.setZero(); }

// --- Modular ----------------------------------------------------------------

ModularFunction::ModularFunction(Eigen::VectorXd scores)
    : SetFunction(static_cast<int>(scores.size())),
      scores_(std::move(scores)) {}

bool ModularFunction::is_monotone() const {
  return scores_.size() == 0 || scores_.minCoeff() >= 0.0;
}

std::unique_ptr<SetFunction> ModularFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new ModularFunction(*this));
}

double ModularFunction::DoEvaluate(std::span<const int> x) const {
  double total = 0.0;
  for (int i : x) total += scores_[i];
  return total;
}

// --- Mixture ----------------------------------------------------------------

MixtureFunction::MixtureFunction(int ground_size) : SetFunction(ground_size) {}

MixtureFunction::MixtureFunction(const MixtureFunction& other)
    : SetFunction(other) {
  for (const Term& t : other.terms_) {
    terms_.push_back(Term{t.fn->Clone(), t.weight, t.id});
  }
}

void MixtureFunction::AddTerm(std::unique_ptr<SetFunction> fn, double weight,
                              std::string id) {
  if (fn->ground_size() != ground_size()) {
    throw Error("mixture term '" + id + "' has a different ground set size");
  }
  if (weight < 0.0 && fn->function_class() != FunctionClass::kModular) {
    throw Error("mixture term '" + id + "' needs a non-negative weight");
  }
  if (!selected().empty()) {
    throw Error("mixture terms must be added before selection starts");
  }
  terms_.push_back(Term{std::move(fn), weight, std::move(id)});
}

FunctionClass MixtureFunction::function_class() const {
  bool all_modular = true;
  bool submodular = true;
  bool supermodular = true;
  bool dispersion_only = true;
  bool any = false;
  for (const Term& t : terms_) {
    if (t.weight == 0.0) continue;
    any = true;
    const FunctionClass c = t.fn->function_class();
    all_modular = all_modular && c == FunctionClass::kModular;
    submodular = submodular && IsSubmodularClass(c);
    supermodular = supermodular && (c == FunctionClass::kModular ||
                                    c == FunctionClass::kSupermodular);
    dispersion_only = dispersion_only && c == FunctionClass::kDispersion;
  }
  if (!any || all_modular) return FunctionClass::kModular;
  if (submodular) {
    return is_monotone() ? FunctionClass::kMonotoneSubmodular
                         : FunctionClass::kSubmodular;
  }
  if (supermodular) return FunctionClass::kSupermodular;
  if (dispersion_only) return FunctionClass::kDispersion;
  return FunctionClass::kGeneral;
}

bool MixtureFunction::is_monotone() const {
  for (const Term& t : terms_) {
    if (t.weight == 0.0) continue;
    if (t.fn->function_class() == FunctionClass::kModular) {
      const auto& scores = static_cast<const ModularFunction&>(*t.fn).scores();
      if (scores.size() > 0 && (t.weight * scores.array()).minCoeff() < 0.0) {
        return false;
      }
    } else if (!t.fn->is_monotone()) {
      return false;
    }
  }
  return true;
}

std::unique_ptr<SetFunction> MixtureFunction::Clone() const {
  return std::unique_ptr<SetFunction>(new MixtureFunction(*this));
}

double MixtureFunction::DoEvaluate(std::span<const int> x) const {
  double total = 0.0;
  for (const Term& t : terms_) {
    if (t.weight != 0.0) total += t.weight * t.fn->Evaluate(x);
  }
  return total;
}

double MixtureFunction::DoGain(int e) const {
  double total = 0.0;
  for (const Term& t : terms_) {
    if (t.weight != 0.0) total += t.weight * t.fn->Gain(e);
  }
  return total;
}

void MixtureFunction::DoAdd(int e) {
  for (Term& t : terms_) t.fn->Add(e);
}

void MixtureFunction::DoReset() {
  for (Term& t : terms_) t.fn->Reset();
}

// --- Component grid
// -----------------------------------------------------------

const char* ComponentKindName(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kSetCover:
      return "set_cover";
    case ComponentKind::kProbSetCover:
      return "prob_set_cover";
    case ComponentKind::kFacilityLocation:
      return "facility_location";
    case ComponentKind::kSaturatedCoverage:
      return "saturated_coverage";
    case ComponentKind::kGraphCut:
      return "graph_cut";
    case ComponentKind::kDisparityMin:
      return "disparity_min";
    case ComponentKind::kContinuity:
      return "continuity";
    case ComponentKind::kModular:
      return "modular";
  }
  return "modular";
}

ComponentKind ParseComponentKind(const std::string& name) {
  for (ComponentKind k :
       {ComponentKind::kSetCover, ComponentKind::kProbSetCover,
        ComponentKind::kFacilityLocation, ComponentKind::kSaturatedCoverage,
        ComponentKind::kGraphCut, ComponentKind::kDisparityMin,
        ComponentKind::kContinuity, ComponentKind::kModular}) {
    if (name == ComponentKindName(k)) return k;
  }
  throw Error("unknown component kind: " + name);
}

std::string ComponentSpec::Id() const {
  std::string id = ComponentKindName(kind);
  char buf[32];
  if (kind == ComponentKind::kGraphCut) {
    std::snprintf(buf, sizeof(buf), "[%g]", graph_cut_lambda);
    id += buf;
  } else if (kind == ComponentKind::kSaturatedCoverage) {
    std::snprintf(buf, sizeof(buf), "[%g]", satcov_fraction);
    id += buf;
  }
  return id + "@" + feature;
}

bool ComponentSpec::EnabledFor(const std::string& domain) const {
  return domains.empty() ||
         std::find(domains.begin(), domains.end(), domain) != domains.end();
}

GroundSetContext::GroundSetContext(const AnnotatedVideo& video)
    : video_(&video) {}

const FeatureMatrix& GroundSetContext::Feature(const std::string& name) const {
  auto it = video_->features.find(name);
  if (it == video_->features.end()) {
    throw Error("video '" + video_->id + "' has no feature '" + name + "'");
  }
  return it->second;
}

std::shared_ptr<const SimilarityMatrix> GroundSetContext::Similarity(
    const std::string& name) {
  auto it = sims_.find(name);
  if (it != sims_.end()) return it->second;
  auto sim =
      std::make_shared<const SimilarityMatrix>(BuildSimilarity(Feature(name)));
  sims_.emplace(name, sim);
  return sim;
}

std::shared_ptr<const Eigen::MatrixXd> GroundSetContext::Distance(
    const std::string& name) {
  auto it = dists_.find(name);
  if (it != dists_.end()) return it->second;
  auto dist = std::make_shared<const Eigen::MatrixXd>(
      DistanceFromSimilarity(*Similarity(name)));
  dists_.emplace(name, dist);
  return dist;
}

std::shared_ptr<const ConceptMatrix> GroundSetContext::Concepts(
    const std::string& name) {
  auto it = concepts_.find(name);
  if (it != concepts_.end()) return it->second;
  auto c =
      std::make_shared<const ConceptMatrix>(BuildConceptMatrix(Feature(name)));
  concepts_.emplace(name, c);
  return c;
}

void CheckComponentSpec(const ComponentSpec& spec,
                        const AnnotatedVideo& video) {
  const std::string id = spec.Id();
  if (spec.kind == ComponentKind::kContinuity) {
    if (spec.feature != kIndicesSource) {
      throw Error(id + ": continuity reads snippet indices ('indices')");
    }
    return;
  }
  auto it = video.features.find(spec.feature);
  if (it == video.features.end()) {
    throw Error(id + ": video '" + video.id + "' has no feature '" +
                spec.feature + "'");
  }
  const FeatureKind kind = it->second.kind;
  switch (spec.kind) {
    case ComponentKind::kSetCover:
      if (kind == FeatureKind::kDense) {
        throw Error(id + ": set cover needs a concept feature");
      }
      break;
    case ComponentKind::kProbSetCover:
      if (kind != FeatureKind::kProbability) {
        throw Error(id +
                    ": probabilistic set cover needs a probability "
                    "feature");
      }
      break;
    default:
      break;
  }
}

std::unique_ptr<SetFunction> InstantiateComponent(const ComponentSpec& spec,
                                                  GroundSetContext& context) {
  CheckComponentSpec(spec, context.video());
  switch (spec.kind) {
    case ComponentKind::kSetCover:
      return std::make_unique<SetCoverFunction>(context.Concepts(spec.feature));
    case ComponentKind::kProbSetCover:
      return std::make_unique<ProbabilisticSetCoverFunction>(
          context.Concepts(spec.feature));
    case ComponentKind::kFacilityLocation:
      return std::make_unique<FacilityLocationFunction>(
          context.Similarity(spec.feature));
    case ComponentKind::kSaturatedCoverage:
      return std::make_unique<SaturatedCoverageFunction>(
          context.Similarity(spec.feature), spec.satcov_fraction);
    case ComponentKind::kGraphCut:
      return std::make_unique<GraphCutFunction>(
          context.Similarity(spec.feature), spec.graph_cut_lambda);
    case ComponentKind::kDisparityMin:
      return std::make_unique<DisparityMinFunction>(
          context.Distance(spec.feature));
    case ComponentKind::kContinuity:
      return std::make_unique<ContinuityFunction>(context.video().shots,
                                                  context.size());
    case ComponentKind::kModular:
      break;
  }
  throw Error(spec.Id() + ": modular terms are not standalone components");
}

std::vector<ComponentSpec> DefaultComponentGrid(const AnnotatedVideo& video) {
  std::vector<ComponentSpec> grid;
  for (const auto& [name, fm] : video.features) {
    if (fm.kind == FeatureKind::kDense) {
      grid.push_back(MakeSpec(ComponentKind::kFacilityLocation, name));
      grid.push_back(MakeSpec(ComponentKind::kSaturatedCoverage, name));
      ComponentSpec low = MakeSpec(ComponentKind::kGraphCut, name);
      low.graph_cut_lambda = 0.2;
      grid.push_back(low);
      ComponentSpec high = MakeSpec(ComponentKind::kGraphCut, name);
      high.graph_cut_lambda = 0.8;
      grid.push_back(high);
      grid.push_back(MakeSpec(ComponentKind::kDisparityMin, name));
    } else {
      grid.push_back(MakeSpec(ComponentKind::kSetCover, name));
      if (fm.kind == FeatureKind::kProbability) {
        grid.push_back(MakeSpec(ComponentKind::kProbSetCover, name));
      }
    }
  }
  grid.push_back(MakeSpec(ComponentKind::kContinuity, kIndicesSource));
  for (const auto& [name, fm] : video.features) {
    grid.push_back(MakeSpec(ComponentKind::kModular, name));
  }
  return grid;
}

nlohmann::json ComponentSpecToJson(const ComponentSpec& spec) {
  nlohmann::json j{{"kind", ComponentKindName(spec.kind)},
                   {"feature", spec.feature}};
  if (spec.kind == ComponentKind::kGraphCut)
    j["lambda"] = spec.graph_cut_lambda;
  if (spec.kind == ComponentKind::kSaturatedCoverage) {
    j["satcov_fraction"] = spec.satcov_fraction;
  }
  if (!spec.domains.empty()) j["domains"] = spec.domains;
  return j;
}

ComponentSpec ComponentSpecFromJson(const nlohmann::json& j) {
  ComponentSpec spec;
  spec.kind = ParseComponentKind(j.at("kind").get<std::string>());
  spec.feature =
      j.value("feature", std::string(spec.kind == ComponentKind::kContinuity
                                         ? kIndicesSource
                                         : ""));
  spec.graph_cut_lambda = j.value("lambda", spec.graph_cut_lambda);
  spec.satcov_fraction = j.value("satcov_fraction", spec.satcov_fraction);
  spec.domains = j.value("domains", std::vector<std::string>{});
  return spec;
}

std::vector<ComponentSpec> LoadComponentGrid(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open component grid: " + path.string());
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    const nlohmann::json& list = doc.is_object() ? doc.at("components") : doc;
    std::vector<ComponentSpec> grid;
    for (const auto& j : list) grid.push_back(ComponentSpecFromJson(j));
    return grid;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed component grid " + path.string() + ": " + e.what());
  }
}

void SaveComponentGrid(const std::filesystem::path& path,
                       std::span<const ComponentSpec> grid) {
  nlohmann::json list = nlohmann::json::array();
  for (const ComponentSpec& s : grid) list.push_back(ComponentSpecToJson(s));
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write component grid: " + path.string());
  out << nlohmann::json{{"components", list}}.dump(2) << "\n";
}

Eigen::MatrixXd ModularFeatureMatrix(const AnnotatedVideo& video,
                                     std::span<const std::string> families) {
  int dim = 0;
  for (const std::string& name : families) {
    auto it = video.features.find(name);
    if (it == video.features.end()) {
      throw Error("video '" + video.id + "' has no feature '" + name + "'");
    }
    dim += it->second.cols();
  }
  const int n = video.n_snippets;
  Eigen::MatrixXd phi(n, dim);
  int col = 0;
  for (const std::string& name : families) {
    const FeatureMatrix& fm = video.features.at(name);
    phi.middleCols(col, fm.cols()) = fm.values.cast<double>();
    col += fm.cols();
  }
  for (int c = 0; c < dim; ++c) {
    const double mean = phi.col(c).mean();
    const double var = (phi.col(c).array() - mean).square().mean();
    const double sd = std::sqrt(var);
    if (sd > 1e-12) {
      phi.col(c) = (phi.col(c).array() - mean) / sd;
    } else {
      phi.col(c).setZero();
    }
  }
  return phi;
}

double EvaluateModular(const Eigen::MatrixXd& phi, std::span<const int> x,
                       const Eigen::VectorXd& w1) {
  if (phi.cols() != w1.size()) {
    throw Error("modular weight dimension " + std::to_string(w1.size()) +
                " does not match feature dimension " +
                std::to_string(phi.cols()));
  }
  CheckIndices(x, static_cast<int>(phi.rows()));
  double total = 0.0;
  for (int i : x) total += phi.row(i).dot(w1);
  return total;
}

}  // namespace vsumm
