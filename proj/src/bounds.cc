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

#include "vsumm/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

#include "vsumm/error.h"
#include "vsumm/functions.h"
#include "vsumm/kernels.h"
#include "vsumm/optimize.h"
#include "vsumm/random.h"

namespace vsumm {
namespace {

constexpr double kE = 2.718281828459045;
constexpr double kTolerance = 1e-12;

Eigen::MatrixXd GaussianRows(Rng& rng, int n, int dim) {
  Eigen::MatrixXd m(n, dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = StandardNormal(rng);
  }
  return m;
}

std::shared_ptr<const SimilarityMatrix> RandomSimilarity(Rng& rng, int n) {
  return std::make_shared<const SimilarityMatrix>(
      BuildSimilarity(GaussianRows(rng, n, 5)));
}

std::shared_ptr<const Eigen::MatrixXd> PlanarDistances(Rng& rng, int n) {
  Eigen::MatrixXd pts(n, 2);
  for (int i = 0; i < n; ++i) {
    pts(i, 0) = UniformUnit(rng);
    pts(i, 1) = UniformUnit(rng);
  }
  auto dist = std::make_shared<Eigen::MatrixXd>(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      (*dist)(i, j) = (pts.row(i) - pts.row(j)).norm();
  }
  return dist;
}

std::shared_ptr<const ConceptMatrix> RandomConcepts(Rng& rng, int n,
                                                    bool probability) {
  auto c = std::make_shared<ConceptMatrix>();
  c->interpretation = probability ? ConceptInterpretation::kProbability
                                  : ConceptInterpretation::kWeight;
  c->values.resize(n, 6);
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < 6; ++u) {
      const double r = UniformUnit(rng);
      c->values(i, u) = probability ? r * r : 0.3 * UniformIndex(rng, 3);
    }
  }
  return c;
}

std::vector<ShotRange> RandomShots(Rng& rng, int n) {
  std::vector<ShotRange> shots;
  int begin = 0;
  while (begin < n) {
    const int len = 2 + static_cast<int>(UniformIndex(rng, 4));
    const int end = std::min(n, begin + len);
    shots.push_back({begin, end});
    begin = end;
  }
  return shots;
}

double Weight(Rng& rng) { return 0.2 + UniformUnit(rng); }

// Monotone submodular mix; always contains facility location so singleton
// values are positive.
void AddMonotoneMix(Rng& rng, int n, MixtureFunction& f) {
  auto sim = RandomSimilarity(rng, n);
  f.AddTerm(std::make_unique<FacilityLocationFunction>(sim), Weight(rng),
            "facility_location");
  if (UniformIndex(rng, 2)) {
    f.AddTerm(std::make_unique<SaturatedCoverageFunction>(sim, 0.3),
              Weight(rng), "saturated_coverage");
  }
  if (UniformIndex(rng, 2)) {
    f.AddTerm(std::make_unique<GraphCutFunction>(sim, 0.3), Weight(rng),
              "graph_cut");
  }
  if (UniformIndex(rng, 2)) {
    f.AddTerm(std::make_unique<SetCoverFunction>(RandomConcepts(rng, n, false)),
              Weight(rng), "set_cover");
  }
  if (UniformIndex(rng, 2)) {
    f.AddTerm(std::make_unique<ProbabilisticSetCoverFunction>(
                  RandomConcepts(rng, n, true)),
              Weight(rng), "prob_set_cover");
  }
}

std::unique_ptr<MixtureFunction> SupermodularPart(Rng& rng, int n) {
  auto l = std::make_unique<MixtureFunction>(n);
  Eigen::VectorXd scores(n);
  for (int i = 0; i < n; ++i) scores[i] = 0.2 + UniformUnit(rng);
  l->AddTerm(std::make_unique<ModularFunction>(scores), Weight(rng), "modular");
  l->AddTerm(std::make_unique<ContinuityFunction>(RandomShots(rng, n), n),
             Weight(rng), "continuity");
  return l;
}

struct Trial {
  double value = 0.0;  // algorithm value (mean for randomized cases)
  double optimum = 0.0;
  double factor = 0.0;
  double positive_exponent_factor = 0.0;
  bool usable = true;
};

Trial RunTrial(const BoundCheckOptions& o, Rng& rng, std::string& note) {
  const int n = o.n;
  const int k = o.k;
  Trial t;
  MixtureFunction f(n);
  std::unique_ptr<MixtureFunction> msub;
  std::unique_ptr<MixtureFunction> sup;
  bool exact_k = false;

  switch (o.case_id) {
    case 1:
      AddMonotoneMix(rng, n, f);
      break;
    case 2: {
      DisparityMinFunction d(PlanarDistances(rng, n));
      t.value = DispersionGreedyMax(d.distances(), k).value;
      t.optimum = BruteForceOpt(d, k, true).value;
      t.factor = 0.5;
      return t;
    }
    case 3:
    case 8:
      f.AddTerm(
          std::make_unique<GraphCutFunction>(RandomSimilarity(rng, n), 0.8),
          1.0, "graph_cut");
      if (o.case_id == 8) {
        f.AddTerm(std::make_unique<ContinuityFunction>(RandomShots(rng, n), n),
                  Weight(rng), "continuity");
      }
      break;
    case 4:
      AddMonotoneMix(rng, n, f);
      f.AddTerm(std::make_unique<DisparityMinFunction>(PlanarDistances(rng, n)),
                1.0 + 4.0 * UniformUnit(rng), "disparity_min");
      exact_k = true;
      break;
    case 5:
      f.AddTerm(
          std::make_unique<GraphCutFunction>(RandomSimilarity(rng, n), 0.8),
          1.0, "graph_cut");
      f.AddTerm(std::make_unique<DisparityMinFunction>(PlanarDistances(rng, n)),
                1.0 + 4.0 * UniformUnit(rng), "disparity_min");
      exact_k = true;
      break;
    case 6:
    case 7: {
      msub = std::make_unique<MixtureFunction>(n);
      AddMonotoneMix(rng, n, *msub);
      sup = SupermodularPart(rng, n);
      f.AddTerm(msub->Clone(), 1.0, "submodular");
      f.AddTerm(sup->Clone(), 1.0, "supermodular");
      if (o.case_id == 7) {
        f.AddTerm(
            std::make_unique<DisparityMinFunction>(PlanarDistances(rng, n)),
            1.0 + 4.0 * UniformUnit(rng), "disparity_min");
        exact_k = true;
      }
      break;
    }
    default:
      throw Error("unknown guarantee case " + std::to_string(o.case_id));
  }

  const GuaranteeCase g = ClassifyGuarantee(f);
  if (g.case_id != o.case_id) {
    note = "instance classified as case " + std::to_string(g.case_id);
  }
  t.optimum = BruteForceOpt(f, k, exact_k || f.is_monotone()).value;

  switch (o.case_id) {
    case 1:
      t.value = GreedyMax(f, k).value;
      t.factor = 1.0 - 1.0 / kE;
      break;
    case 3:
    case 5: {
      double total = 0.0;
      for (int s = 0; s < o.random_seeds; ++s) {
        const uint64_t run_seed = MixSeed(o.seed, 1000003ULL * s + 17);
        total += o.case_id == 3 ? RandomizedGreedyMax(f, k, run_seed).value
                                : BestOfTwo(f, k, run_seed).value;
      }
      t.value = total / o.random_seeds;
      t.factor = o.case_id == 3 ? 1.0 / kE : 1.0 / (2.0 * kE);
      break;
    }
    case 4:
      t.value = BestOfTwo(f, k, o.seed).value;
      t.factor = 0.25;
      break;
    case 6:
    case 7: {
      const Curvature ck = SubmodularCurvature(*msub);
      const Curvature cl = SupermodularCurvature(*sup);
      if (!ck.defined || !cl.defined) {
        t.usable = false;
        note = ck.defined ? cl.note : ck.note;
        return t;
      }
      const double half = o.case_id == 7 ? 0.5 : 1.0;
      t.factor = half * CurvatureFactor(ck.kappa, cl.kappa);
      t.positive_exponent_factor =
          half * CurvatureFactorPositiveExponent(ck.kappa, cl.kappa);
      t.value = o.case_id == 6 ? GreedyMax(f, k).value
                               : BestOfTwo(f, k, o.seed).value;
      break;
    }
    case 8:
      t.value = GreedyMax(f, k).value;
      break;
  }
  return t;
}

const char* AlgorithmName(int case_id) {
  switch (case_id) {
    case 1:
    case 6:
    case 8:
      return "greedy";
    case 2:
      return "dispersion greedy";
    case 3:
      return "randomized greedy (mean over seeds)";
    case 4:
    case 7:
      return "best of two";
    case 5:
      return "best of two with randomized greedy (mean over seeds)";
  }
  return "";
}

const char* GuaranteeName(int case_id) {
  switch (case_id) {
    case 1:
      return "1 - 1/e";
    case 2:
      return "1/2";
    case 3:
      return "1/e";
    case 4:
      return "1/4";
    case 5:
      return "1/(2e)";
    case 6:
      return "(1 - exp(-(1 - kl) kk)) / kk";
    case 7:
      return "(1 - exp(-(1 - kl) kk)) / (2 kk)";
    case 8:
      return "none";
  }
  return "";
}

}  // namespace

BoundCheckReport VerifyBounds(const BoundCheckOptions& o) {
  if (o.case_id < 1 || o.case_id > 8) {
    throw Error("guarantee case must be in 1..8");
  }
  if (o.trials < 1) throw Error("trials must be >= 1");
  if (o.random_seeds < 1) throw Error("random_seeds must be >= 1");
  BoundCheckReport r;
  r.case_id = o.case_id;
  r.n = o.n;
  r.k = o.k;
  r.trials = o.trials;
  r.checked = o.case_id != 8;
  r.algorithm = AlgorithmName(o.case_id);
  r.guarantee = GuaranteeName(o.case_id);
  if (o.case_id == 8) r.tag = kNoGuaranteeTag;

  r.min_factor = std::numeric_limits<double>::infinity();
  r.min_ratio = std::numeric_limits<double>::infinity();
  r.min_slack = std::numeric_limits<double>::infinity();
  double factor_sum = 0.0;
  double ratio_sum = 0.0;
  double positive_sum = 0.0;
  for (int trial = 0; trial < o.trials; ++trial) {
    Rng rng(MixSeed(o.seed, static_cast<uint64_t>(trial)));
    std::string note;
    const Trial t = RunTrial(o, rng, note);
    if (!note.empty() && r.note.empty()) r.note = note;
    if (!t.usable || !(t.optimum > 0.0)) {
      ++r.skipped;
      continue;
    }
    ++r.evaluated;
    const double ratio = t.value / t.optimum;
    ratio_sum += ratio;
    factor_sum += t.factor;
    positive_sum += t.positive_exponent_factor;
    r.min_ratio = std::min(r.min_ratio, ratio);
    r.min_factor = std::min(r.min_factor, t.factor);
    r.min_slack = std::min(r.min_slack, ratio - t.factor);
    if (r.checked && ratio < t.factor - kTolerance) ++r.violations;
  }
  if (r.evaluated > 0) {
    r.mean_ratio = ratio_sum / r.evaluated;
    r.mean_factor = factor_sum / r.evaluated;
    r.mean_positive_exponent_factor = positive_sum / r.evaluated;
  }
  return r;
}

std::string FormatBoundReport(const BoundCheckReport& r) {
  char buf[512];
  if (!r.checked) {
    std::snprintf(buf, sizeof(buf),
                  "case %d [%s] n=%d k=%d trials=%d: %s; min ratio %.4f, "
                  "mean ratio %.4f",
                  r.case_id, r.algorithm.c_str(), r.n, r.k, r.trials,
                  r.tag.c_str(), r.min_ratio, r.mean_ratio);
    return buf;
  }
  std::snprintf(buf, sizeof(buf),
                "case %d [%s] n=%d k=%d trials=%d evaluated=%d: bound %s "
                "(min %.4f, mean %.4f); ratio min %.4f mean %.4f; "
                "min slack %.4f; violations %d",
                r.case_id, r.algorithm.c_str(), r.n, r.k, r.trials, r.evaluated,
                r.guarantee.c_str(), r.min_factor, r.mean_factor, r.min_ratio,
                r.mean_ratio, r.min_slack, r.violations);
  std::string out = buf;
  if (r.case_id == 6 || r.case_id == 7) {
    std::snprintf(buf, sizeof(buf),
                  "; positive-exponent form mean %.4f (vacuous)",
                  r.mean_positive_exponent_factor);
    out += buf;
  }
  if (!r.note.empty()) out += "; note: " + r.note;
  return out;
}

}  // namespace vsumm
