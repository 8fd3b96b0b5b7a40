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

// Set functions over a video's snippets and the per-video instantiation of
// the component grid.
//
// Every function supports two evaluation paths: Evaluate() recomputes f(X)
// from scratch, while Reset()/Gain()/Add() maintain cached statistics for the
// currently selected set so that a marginal gain costs O(n) or less. The two
// paths must agree; tests check them against each other.

#ifndef VSUMM_FUNCTIONS_H_
#define VSUMM_FUNCTIONS_H_

#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "vsumm/corpus.h"
#include "vsumm/kernels.h"

namespace vsumm {

enum class FunctionClass {
  kModular,
  kMonotoneSubmodular,
  kSubmodular,  // submodular, possibly non-monotone
  kSupermodular,
  kDispersion,
  kGeneral,
};

const char* FunctionClassName(FunctionClass c);

class SetFunction {
 public:
  explicit SetFunction(int ground_size);
  virtual ~SetFunction() = default;

  int ground_size() const { return n_; }

  // f(X) from scratch. Throws on out-of-range or repeated indices.
  double Evaluate(std::span<const int> x) const;

  // Incremental interface over the internally tracked selection.
  void Reset();
  double Gain(int e) const;  // f(S + e) - f(S); throws if e is in S
  void Add(int e);
  double value() const { return value_; }
  const std::vector<int>& selected() const { return selected_; }
  bool contains(int e) const { return in_set_[e] != 0; }

  virtual FunctionClass function_class() const = 0;
  // Non-decreasing under inclusion.
  virtual bool is_monotone() const;
  // Clone copies the incremental state too; the clone evolves independently.
  virtual std::unique_ptr<SetFunction> Clone() const = 0;

 protected:
  SetFunction(const SetFunction&) = default;

  virtual double DoEvaluate(std::span<const int> x) const = 0;
  virtual double DoGain(int e) const = 0;
  virtual void DoAdd(int e) = 0;
  virtual void DoReset() = 0;

 private:
  int n_;
  std::vector<char> in_set_;
  std::vector<int> selected_;
  double value_ = 0.0;
};

// Resets `f`, adds `x` and returns f(x + e) - f(x).
double MarginalGain(SetFunction& f, std::span<const int> x, int e);

// sum_u min(m_u(X), 1) with m_u(X) = sum_{x in X} w_xu.
class SetCoverFunction : public SetFunction {
 public:
  explicit SetCoverFunction(std::shared_ptr<const ConceptMatrix> concepts);
  FunctionClass function_class() const override {
    return FunctionClass::kMonotoneSubmodular;
  }
  std::unique_ptr<SetFunction> Clone() const override;

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  std::shared_ptr<const ConceptMatrix> concepts_;
  Eigen::VectorXd mass_;
};

// sum_u (1 - prod_{x in X} (1 - p_xu)).
class ProbabilisticSetCoverFunction : public SetFunction {
 public:
  explicit ProbabilisticSetCoverFunction(
      std::shared_ptr<const ConceptMatrix> concepts);
  FunctionClass function_class() const override {
    return FunctionClass::kMonotoneSubmodular;
  }
  std::unique_ptr<SetFunction> Clone() const override;

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  std::shared_ptr<const ConceptMatrix> concepts_;
  Eigen::VectorXd uncovered_;  // prod (1 - p_xu) over the selection
};

// sum_{v in V} max_{x in X} sim(v, x); 0 on the empty set.
class FacilityLocationFunction : public SetFunction {
 public:
  explicit FacilityLocationFunction(
      std::shared_ptr<const SimilarityMatrix> sim);
  FunctionClass function_class() const override {
    return FunctionClass::kMonotoneSubmodular;
  }
  std::unique_ptr<SetFunction> Clone() const override;

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  std::shared_ptr<const SimilarityMatrix> sim_;
  Eigen::VectorXd best_;
};

// sum_{v in V} min(m_v(X), c_v) with m_v(X) = sum_{x in X} sim(v, x) and
// c_v = fraction * m_v(V).
class SaturatedCoverageFunction : public SetFunction {
 public:
  SaturatedCoverageFunction(std::shared_ptr<const SimilarityMatrix> sim,
                            double fraction);
  FunctionClass function_class() const override {
    return FunctionClass::kMonotoneSubmodular;
  }
  std::unique_ptr<SetFunction> Clone() const override;

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  std::shared_ptr<const SimilarityMatrix> sim_;
  Eigen::VectorXd cap_;
  Eigen::VectorXd mass_;
};

// sum_{i in V, j in X} sim(i, j) - lambda * sum_{i, j in X} sim(i, j), the
// second sum over ordered pairs including i == j. Monotone for
// lambda <= 0.5 when similarities lie in [0, 1] with unit diagonal.
class GraphCutFunction : public SetFunction {
 public:
  GraphCutFunction(std::shared_ptr<const SimilarityMatrix> sim, double lambda);
  FunctionClass function_class() const override;
  std::unique_ptr<SetFunction> Clone() const override;
  double lambda() const { return lambda_; }

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  std::shared_ptr<const SimilarityMatrix> sim_;
  double lambda_;
  Eigen::VectorXd column_sum_;
  Eigen::VectorXd inner_;  // inner_[e] = sum_{j in S} sim(e, j)
};

// min_{i != j in X} d_ij for |X| >= 2. A singleton scores D_max, the largest
// pairwise distance of the ground set, and the empty set scores 0.
class DisparityMinFunction : public SetFunction {
 public:
  explicit DisparityMinFunction(std::shared_ptr<const Eigen::MatrixXd> dist);
  FunctionClass function_class() const override {
    return FunctionClass::kDispersion;
  }
  bool is_monotone() const override { return false; }
  std::unique_ptr<SetFunction> Clone() const override;
  const Eigen::MatrixXd& distances() const { return *dist_; }
  double max_distance() const { return max_distance_; }

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  std::shared_ptr<const Eigen::MatrixXd> dist_;
  double max_distance_ = 0.0;
  int count_ = 0;
  double current_min_ = 0.0;
  Eigen::VectorXd nearest_;  // min distance from each snippet to S
};

// sum over shots s of sum over unordered pairs {x, x'} in s ∩ X of
// 1 / (1 + |x - x'|). Supermodular and monotone.
class ContinuityFunction : public SetFunction {
 public:
  ContinuityFunction(std::vector<ShotRange> shots, int n_snippets);
  FunctionClass function_class() const override {
    return FunctionClass::kSupermodular;
  }
  std::unique_ptr<SetFunction> Clone() const override;

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  std::shared_ptr<const std::vector<ShotRange>> shots_;
  std::shared_ptr<const std::vector<int>> shot_of_;
  Eigen::VectorXd pull_;  // pull_[e] = sum_{j in S, same shot} w(e, j)
};

// sum_{x in X} score_x.
class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(Eigen::VectorXd scores);
  FunctionClass function_class() const override {
    return FunctionClass::kModular;
  }
  bool is_monotone() const override;
  std::unique_ptr<SetFunction> Clone() const override;
  const Eigen::VectorXd& scores() const { return scores_; }

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override { return scores_[e]; }
  void DoAdd(int) override {}
  void DoReset() override {}

 private:
  Eigen::VectorXd scores_;
};

// sum_i weight_i * f_i(X). Weights of non-modular terms must be >= 0.
class MixtureFunction : public SetFunction {
 public:
  explicit MixtureFunction(int ground_size);
  MixtureFunction(const MixtureFunction& other);

  void AddTerm(std::unique_ptr<SetFunction> fn, double weight,
               std::string id = "");
  int term_count() const { return static_cast<int>(terms_.size()); }
  const SetFunction& term(int i) const { return *terms_[i].fn; }
  SetFunction& mutable_term(int i) { return *terms_[i].fn; }
  double weight(int i) const { return terms_[i].weight; }
  const std::string& term_id(int i) const { return terms_[i].id; }

  FunctionClass function_class() const override;
  bool is_monotone() const override;
  std::unique_ptr<SetFunction> Clone() const override;

 protected:
  double DoEvaluate(std::span<const int> x) const override;
  double DoGain(int e) const override;
  void DoAdd(int e) override;
  void DoReset() override;

 private:
  struct Term {
    std::unique_ptr<SetFunction> fn;
    double weight = 0.0;
    std::string id;
  };
  std::vector<Term> terms_;
};

bool IsSubmodularClass(FunctionClass c);

// --- Component grid -------------------------------------------------------

enum class ComponentKind {
  kSetCover,
  kProbSetCover,
  kFacilityLocation,
  kSaturatedCoverage,
  kGraphCut,
  kDisparityMin,
  kContinuity,
  kModular,
};

const char* ComponentKindName(ComponentKind kind);
ComponentKind ParseComponentKind(const std::string& name);

struct ComponentSpec {
  ComponentKind kind = ComponentKind::kFacilityLocation;
  std::string feature;  // feature family, or "indices" for continuity
  double graph_cut_lambda = 0.5;
  double satcov_fraction = 0.2;
  std::vector<std::string> domains;  // empty: enabled for every domain

  // Stable identifier, e.g. "graph_cut[0.2]@scene_features".
  std::string Id() const;
  bool EnabledFor(const std::string& domain) const;
};

// The similarity / distance / concept structures of one video, built lazily
// and shared by all components instantiated from it.
class GroundSetContext {
 public:
  explicit GroundSetContext(const AnnotatedVideo& video);

  const AnnotatedVideo& video() const { return *video_; }
  int size() const { return video_->n_snippets; }

  std::shared_ptr<const SimilarityMatrix> Similarity(const std::string& name);
  std::shared_ptr<const Eigen::MatrixXd> Distance(const std::string& name);
  std::shared_ptr<const ConceptMatrix> Concepts(const std::string& name);

 private:
  const FeatureMatrix& Feature(const std::string& name) const;

  const AnnotatedVideo* video_;
  std::map<std::string, std::shared_ptr<const SimilarityMatrix>> sims_;
  std::map<std::string, std::shared_ptr<const Eigen::MatrixXd>> dists_;
  std::map<std::string, std::shared_ptr<const ConceptMatrix>> concepts_;
};

// Builds a non-modular component. Modular specs are handled by the learner
// (see ModularFeatureMatrix) and rejected here.
std::unique_ptr<SetFunction> InstantiateComponent(const ComponentSpec& spec,
                                                  GroundSetContext& context);

// Throws Error when the spec's feature source does not fit its kind.
void CheckComponentSpec(const ComponentSpec& spec, const AnnotatedVideo& video);

// Default grid: facility location, saturated coverage, graph cut (0.2 and
// 0.8) and disparity-min on each dense family; set cover and probabilistic
// set cover on each concept family; continuity over indices; one modular
// entry per family.
std::vector<ComponentSpec> DefaultComponentGrid(const AnnotatedVideo& video);

// One grid entry as {kind, feature, lambda, satcov_fraction, domains}; the
// kind-specific and empty fields are omitted.
nlohmann::json ComponentSpecToJson(const ComponentSpec& spec);
ComponentSpec ComponentSpecFromJson(const nlohmann::json& j);

// Grid files: {"components": [entry, ...]}.
std::vector<ComponentSpec> LoadComponentGrid(const std::filesystem::path& path);
void SaveComponentGrid(const std::filesystem::path& path,
                       std::span<const ComponentSpec> grid);

// Rows are z-scored concatenations of the named families (each column
// standardized over the video's snippets; constant columns become 0).
Eigen::MatrixXd ModularFeatureMatrix(const AnnotatedVideo& video,
                                     std::span<const std::string> families);

// sum_{x in X} <w1, phi(x)> for phi = ModularFeatureMatrix rows.
double EvaluateModular(const Eigen::MatrixXd& phi, std::span<const int> x,
                       const Eigen::VectorXd& w1);

}  // namespace vsumm

#endif  // VSUMM_FUNCTIONS_H_
