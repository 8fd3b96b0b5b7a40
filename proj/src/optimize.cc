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

#include "vsumm/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include "vsumm/error.h"
#include "vsumm/random.h"

namespace vsumm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckBudget(int k, int n) {
  if (k < 1) throw Error("budget k must be >= 1");
  if (k > n) {
    throw Error("budget k=" + std::to_string(k) + " exceeds ground set size " +
                std::to_string(n));
  }
}

bool MayStopEarly(const SetFunction& f, const GreedyOptions& options) {
  return !options.fill_budget && !f.is_monotone();
}

GreedyResult NaiveGreedy(SetFunction& f, int k, const GreedyOptions& options) {
  GreedyResult result;
  const bool may_stop = MayStopEarly(f, options);
  for (int step = 0; step < k; ++step) {
    double best = -kInf;
    int arg = -1;
    for (int e = 0; e < f.ground_size(); ++e) {
      if (f.contains(e)) continue;
      const double g = f.Gain(e);
      ++result.gain_evaluations;
      if (g > best) {
        best = g;
        arg = e;
      }
    }
    if (arg < 0 || (may_stop && best <= 0.0)) break;
    f.Add(arg);
  }
  result.selected = f.selected();
  result.value = f.value();
  return result;
}

struct Entry {
  double bound;
  int index;
};

// Top of the heap: largest bound, then lowest index.
struct EntryOrder {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.index > b.index;
  }
};

GreedyResult LazyGreedy(SetFunction& f, int k, const GreedyOptions& options) {
  GreedyResult result;
  result.lazy_used = true;
  const bool may_stop = MayStopEarly(f, options);
  const int n = f.ground_size();
  std::vector<int> stamp(n, 0);
  std::priority_queue<Entry, std::vector<Entry>, EntryOrder> heap;
  for (int e = 0; e < n; ++e) {
    heap.push({f.Gain(e), e});
    ++result.gain_evaluations;
  }
  for (int step = 0; step < k && !heap.empty(); ++step) {
    // Refresh stale entries until the top is current.
    while (stamp[heap.top().index] != step) {
      Entry top = heap.top();
      heap.pop();
      top.bound = f.Gain(top.index);
      stamp[top.index] = step;
      ++result.gain_evaluations;
      heap.push(top);
    }
    // Stale bounds may undercut the true gain by rounding, so every entry
    // within a small window of the best current gain is refreshed and the
    // winner is picked with the same comparison the naive scan uses.
    std::vector<Entry> window;
    double best = heap.top().bound;
    while (!heap.empty() &&
           heap.top().bound >= best - 1e-9 * std::max(1.0, std::abs(best))) {
      Entry e = heap.top();
      heap.pop();
      if (stamp[e.index] != step) {
        e.bound = f.Gain(e.index);
        stamp[e.index] = step;
        ++result.gain_evaluations;
      }
      best = std::max(best, e.bound);
      window.push_back(e);
    }
    size_t arg = 0;
    for (size_t i = 1; i < window.size(); ++i) {
      if (window[i].bound > window[arg].bound ||
          (window[i].bound == window[arg].bound &&
           window[i].index < window[arg].index)) {
        arg = i;
      }
    }
    if (may_stop && window[arg].bound <= 0.0) break;
    f.Add(window[arg].index);
    for (size_t i = 0; i < window.size(); ++i) {
      if (i != arg) heap.push(window[i]);
    }
    // Entries refreshed at this step become stale once the set grows.
  }
  result.selected = f.selected();
  result.value = f.value();
  return result;
}

double MinPairwise(const Eigen::MatrixXd& dist, const std::vector<int>& x) {
  double best = kInf;
  for (size_t a = 0; a < x.size(); ++a) {
    for (size_t b = a + 1; b < x.size(); ++b) {
      best = std::min(best, dist(x[a], x[b]));
    }
  }
  return best;
}

void Select(SetFunction& f, const std::vector<int>& x) {
  f.Reset();
  for (int e : x) f.Add(e);
}

// Enumerates all size-`size` combinations of [0, n) in lexicographic order.
template <typename Visit>
void ForEachCombination(int n, int size, Visit&& visit) {
  std::vector<int> c(size);
  for (int i = 0; i < size; ++i) c[i] = i;
  while (true) {
    visit(c);
    int i = size - 1;
    while (i >= 0 && c[i] == n - size + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

GreedyResult GreedyMax(SetFunction& f, int k, const GreedyOptions& options) {
  CheckBudget(k, f.ground_size());
  f.Reset();
  if (options.lazy && IsSubmodularClass(f.function_class())) {
    return LazyGreedy(f, k, options);
  }
  return NaiveGreedy(f, k, options);
}

GreedyResult RandomizedGreedyMax(SetFunction& f, int k, uint64_t seed,
                                 bool dummies) {
  CheckBudget(k, f.ground_size());
  f.Reset();
  Rng rng(seed);
  GreedyResult result;
  std::vector<Entry> candidates;
  for (int step = 0; step < k; ++step) {
    candidates.clear();
    for (int e = 0; e < f.ground_size(); ++e) {
      if (f.contains(e)) continue;
      candidates.push_back({f.Gain(e), e});
      ++result.gain_evaluations;
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Entry& a, const Entry& b) {
                if (a.bound != b.bound) return a.bound > b.bound;
                return a.index < b.index;
              });
    if (dummies) {
      // k zero-gain placeholders compete for the k slots; real elements of
      // gain >= 0 rank ahead of them.
      std::vector<Entry> slots;
      size_t next = 0;
      int placeholders = k;
      while (static_cast<int>(slots.size()) < k) {
        if (next < candidates.size() &&
            (candidates[next].bound >= 0.0 || placeholders == 0)) {
          slots.push_back(candidates[next++]);
        } else {
          slots.push_back({0.0, -1});
          --placeholders;
        }
      }
      const Entry pick = slots[UniformIndex(rng, slots.size())];
      if (pick.index >= 0) f.Add(pick.index);
    } else {
      const size_t width = std::min<size_t>(k, candidates.size());
      f.Add(candidates[UniformIndex(rng, width)].index);
    }
  }
  result.selected = f.selected();
  result.value = f.value();
  return result;
}

GreedyResult DispersionGreedyMax(const Eigen::MatrixXd& dist, int k) {
  const int n = static_cast<int>(dist.rows());
  if (dist.cols() != n) throw Error("distance matrix must be square");
  if (k < 2) throw Error("dispersion greedy needs k >= 2");
  CheckBudget(k, n);
  GreedyResult result;
  int bi = 0;
  int bj = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist(i, j) > dist(bi, bj)) {
        bi = i;
        bj = j;
      }
      ++result.gain_evaluations;
    }
  }
  std::vector<char> chosen(n, 0);
  std::vector<int> selected{bi, bj};
  chosen[bi] = chosen[bj] = 1;
  Eigen::VectorXd nearest = dist.col(bi).cwiseMin(dist.col(bj));
  while (static_cast<int>(selected.size()) < k) {
    int arg = -1;
    for (int e = 0; e < n; ++e) {
      if (chosen[e]) continue;
      ++result.gain_evaluations;
      if (arg < 0 || nearest[e] > nearest[arg]) arg = e;
    }
    chosen[arg] = 1;
    selected.push_back(arg);
    nearest = nearest.cwiseMin(dist.col(arg));
  }
  result.selected = selected;
  result.value = MinPairwise(dist, selected);
  return result;
}

BestOfTwoResult BestOfTwo(MixtureFunction& f, int k, uint64_t seed) {
  CheckBudget(k, f.ground_size());
  MixtureFunction rest(f.ground_size());
  const Eigen::MatrixXd* dist = nullptr;
  bool has_rest = false;
  bool has_dispersion = false;
  for (int i = 0; i < f.term_count(); ++i) {
    const SetFunction& term = f.term(i);
    if (term.function_class() == FunctionClass::kDispersion) {
      const auto* d = dynamic_cast<const DisparityMinFunction*>(&term);
      if (d == nullptr) throw Error("unsupported dispersion term");
      if (dist != nullptr && dist != &d->distances()) {
        throw Error("dispersion terms must share one distance matrix");
      }
      dist = &d->distances();
      has_dispersion = has_dispersion || f.weight(i) > 0.0;
    } else {
      rest.AddTerm(term.Clone(), f.weight(i), f.term_id(i));
      has_rest = has_rest || f.weight(i) != 0.0;
    }
  }

  std::vector<int> first;
  if (has_rest || !has_dispersion) {
    const GuaranteeCase g = ClassifyGuarantee(rest);
    if (g.case_id == 8) {
      throw Error(
          "best-of-two: the non-dispersion part mixes non-monotone "
          "submodular and supermodular terms");
    }
    if (g.case_id == 3) {
      first = RandomizedGreedyMax(rest, k, seed).selected;
    } else {
      first = GreedyMax(rest, k).selected;
    }
  }
  std::vector<int> second;
  if (has_dispersion) {
    second =
        k >= 2 ? DispersionGreedyMax(*dist, k).selected : std::vector<int>{0};
  }

  BestOfTwoResult out;
  if (!first.empty()) out.first_value = f.Evaluate(first);
  if (!second.empty()) out.second_value = f.Evaluate(second);
  if (second.empty() ||
      (!first.empty() && out.first_value >= out.second_value)) {
    out.selected = first;
    out.value = out.first_value;
  } else {
    out.selected = second;
    out.value = out.second_value;
    out.chose_dispersion = true;
  }
  Select(f, out.selected);
  return out;
}

BruteForceResult BruteForceOpt(const SetFunction& f, int k, bool exact_size) {
  const int n = f.ground_size();
  if (n > kBruteForceMaxGround || k > kBruteForceMaxK) {
    throw Error(
        "brute force limited to n <= " + std::to_string(kBruteForceMaxGround) +
        " and k <= " + std::to_string(kBruteForceMaxK));
  }
  CheckBudget(k, n);
  BruteForceResult best;
  best.value = -kInf;
  for (int size = exact_size ? k : 0; size <= k; ++size) {
    if (size == 0) {
      const double v = f.Evaluate({});
      if (v > best.value) {
        best.value = v;
        best.selected.clear();
      }
      continue;
    }
    ForEachCombination(n, size, [&](const std::vector<int>& c) {
      const double v = f.Evaluate(c);
      if (v > best.value) {
        best.value = v;
        best.selected = c;
      }
    });
  }
  return best;
}

BruteForceResult BruteForceOpt(const SetFunction& f, int k) {
  return BruteForceOpt(f, k, f.is_monotone());
}

Curvature SubmodularCurvature(SetFunction& f) {
  const int n = f.ground_size();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const double empty = f.Evaluate({});
  const double full = f.Evaluate(all);
  Curvature out;
  double min_ratio = kInf;
  for (int j = 0; j < n; ++j) {
    const int one[] = {j};
    const double single = f.Evaluate(one) - empty;
    if (!(single > 0.0)) {
      out.defined = false;
      out.note = "singleton value f(" + std::to_string(j) +
                 ") is 0; curvature undefined";
      out.kappa = std::numeric_limits<double>::quiet_NaN();
      return out;
    }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
      if (i != j) rest.push_back(i);
    }
    const double last = full - f.Evaluate(rest);
    min_ratio = std::min(min_ratio, last / single);
  }
  out.kappa = n == 0 ? 0.0 : std::clamp(1.0 - min_ratio, 0.0, 1.0);
  return out;
}

Curvature SupermodularCurvature(SetFunction& l) {
  const int n = l.ground_size();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const double empty = l.Evaluate({});
  const double full = l.Evaluate(all);
  Curvature out;
  double min_ratio = 1.0;
  for (int j = 0; j < n; ++j) {
    const int one[] = {j};
    const double single = l.Evaluate(one) - empty;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
      if (i != j) rest.push_back(i);
    }
    const double last = full - l.Evaluate(rest);
    if (last > 0.0) min_ratio = std::min(min_ratio, single / last);
  }
  out.kappa = std::clamp(1.0 - min_ratio, 0.0, 1.0);
  return out;
}

double CurvatureFactor(double kappa_k, double kappa_l) {
  if (kappa_k < 1e-12) return 1.0 - kappa_l;
  return -std::expm1(-(1.0 - kappa_l) * kappa_k) / kappa_k;
}

double CurvatureFactorPositiveExponent(double kappa_k, double kappa_l) {
  if (kappa_k < 1e-12) return -(1.0 - kappa_l);
  return -std::expm1((1.0 - kappa_l) * kappa_k) / kappa_k;
}

namespace {

void AccumulateWeights(const MixtureFunction& f, double scale,
                       GuaranteeCase& g) {
  for (int i = 0; i < f.term_count(); ++i) {
    const double w = scale * f.weight(i);
    if (w == 0.0) continue;
    const SetFunction& term = f.term(i);
    if (const auto* inner = dynamic_cast<const MixtureFunction*>(&term)) {
      AccumulateWeights(*inner, w, g);
      continue;
    }
    switch (term.function_class()) {
      case FunctionClass::kModular: {
        const auto& scores = static_cast<const ModularFunction&>(term).scores();
        const bool nonneg =
            scores.size() == 0 || (w * scores.array()).minCoeff() >= 0.0;
        (nonneg ? g.alpha : g.beta) += std::abs(w);
        break;
      }
      case FunctionClass::kMonotoneSubmodular:
        g.alpha += w;
        break;
      case FunctionClass::kSubmodular:
        g.beta += w;
        break;
      case FunctionClass::kSupermodular:
        g.gamma += w;
        break;
      case FunctionClass::kDispersion:
        g.delta += w;
        break;
      case FunctionClass::kGeneral:
        g.beta += w;
        g.gamma += w;
        break;
    }
  }
}

}  // namespace

GuaranteeCase ClassifyGuarantee(const MixtureFunction& f) {
  GuaranteeCase g;
  AccumulateWeights(f, 1.0, g);
  const bool b = g.beta > 0.0;
  const bool c = g.gamma > 0.0;
  const bool d = g.delta > 0.0;
  const bool a = g.alpha > 0.0;
  if (b && c) {
    g.case_id = 8;
    g.description = kNoGuaranteeTag;
  } else if (c && d) {
    g.case_id = 7;
    g.description = "curvature factor / 2 (best of two)";
  } else if (c) {
    g.case_id = 6;
    g.description = "curvature factor (greedy)";
  } else if (b && d) {
    g.case_id = 5;
    g.description = "1/(2e) (best of two, randomized)";
  } else if (a && d) {
    g.case_id = 4;
    g.description = "1/4 (best of two)";
  } else if (d) {
    g.case_id = 2;
    g.description = "1/2 (dispersion greedy)";
  } else if (b) {
    g.case_id = 3;
    g.description = "1/e (randomized greedy)";
  } else {
    g.case_id = 1;
    g.description = "1 - 1/e (greedy)";
  }
  return g;
}

}  // namespace vsumm
