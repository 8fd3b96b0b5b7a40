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

// Python bindings for the core library.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "vsumm/bounds.h"
#include "vsumm/corpus.h"
#include "vsumm/error.h"
#include "vsumm/gtgen.h"
#include "vsumm/learn.h"
#include "vsumm/measure.h"
#include "vsumm/synthetic.h"

namespace py = pybind11;

namespace vsumm {
namespace {

ScoreBounds BoundsFor(const ScoreFunction& score, int budget) {
  return ComputeScoreBounds(score, budget);
}

py::dict ReportToDict(const SummaryReport& r) {
  py::list parts;
  for (const ComponentContribution& c : r.contributions) {
    parts.append(py::dict(py::arg("id") = c.id, py::arg("weight") = c.weight,
                          py::arg("value") = c.value,
                          py::arg("contribution") = c.contribution));
  }
  return py::dict(
      py::arg("video_id") = r.video_id, py::arg("budget") = r.budget,
      py::arg("snippets") = r.snippets,
      py::arg("mixture_value") = r.mixture_value, py::arg("score") = r.score,
      py::arg("normalized_score") = r.normalized_score,
      py::arg("score_loss") = r.score_loss, py::arg("s_min") = r.bounds.s_min,
      py::arg("s_max") = r.bounds.s_max, py::arg("contributions") = parts,
      py::arg("guarantee") = r.guarantee);
}

}  // namespace

PYBIND11_MODULE(_vsumm, m) {
  m.doc() =
      "Rating-aware video summarization with learned set-function "
      "mixtures.";
  py::register_exception<Error>(m, "VsummError", PyExc_ValueError);

  py::class_<Segment>(m, "Segment")
      .def(py::init([](double start_sec, double end_sec, int rating,
                       bool repetitive) {
             return Segment{start_sec, end_sec, rating, repetitive, ""};
           }),
           py::arg("start_sec"), py::arg("end_sec"), py::arg("rating"),
           py::arg("repetitive") = false)
      .def_readwrite("start_sec", &Segment::start_sec)
      .def_readwrite("end_sec", &Segment::end_sec)
      .def_readwrite("rating", &Segment::rating)
      .def_readwrite("repetitive", &Segment::repetitive)
      .def_readwrite("description", &Segment::description);

  py::class_<AnnotatedVideo>(m, "Video")
      .def(py::init<>())
      .def_readwrite("id", &AnnotatedVideo::id)
      .def_readwrite("domain", &AnnotatedVideo::domain)
      .def_readwrite("snippet_seconds", &AnnotatedVideo::snippet_seconds)
      .def_readwrite("n_snippets", &AnnotatedVideo::n_snippets)
      .def_readwrite("segments", &AnnotatedVideo::segments)
      .def_property(
          "shots",
          [](const AnnotatedVideo& v) {
            std::vector<std::pair<int, int>> out;
            for (const ShotRange& s : v.shots) out.emplace_back(s.begin, s.end);
            return out;
          },
          [](AnnotatedVideo& v, const std::vector<std::pair<int, int>>& s) {
            v.shots.clear();
            for (const auto& [b, e] : s) v.shots.push_back({b, e});
          })
      .def("feature_names",
           [](const AnnotatedVideo& v) {
             std::vector<std::string> names;
             for (const auto& [name, fm] : v.features) names.push_back(name);
             return names;
           })
      .def(
          "feature",
          [](const AnnotatedVideo& v, const std::string& name) {
            auto it = v.features.find(name);
            if (it == v.features.end()) {
              throw Error("video '" + v.id + "' has no feature '" + name + "'");
            }
            return it->second.values;
          })
      .def("feature_kind",
           [](const AnnotatedVideo& v, const std::string& name) {
             return std::string(FeatureKindName(v.features.at(name).kind));
           })
      .def(
          "set_feature",
          [](AnnotatedVideo& v, const std::string& name,
             const FeatureValues& values, const std::string& kind) {
            v.features[name] =
                FeatureMatrix{name, ParseFeatureKind(kind), values};
          },
          py::arg("name"), py::arg("values"), py::arg("kind") = "dense")
      .def("validate", &ValidateVideo);

  py::class_<MeasureParams>(m, "MeasureParams")
      .def(py::init([](double alpha, double beta_sec, double penalty) {
             MeasureParams p{alpha, beta_sec, penalty};
             p.Validate();
             return p;
           }),
           py::arg("alpha") = 1.0, py::arg("beta_sec") = 6.0,
           py::arg("penalty") = 2.0)
      .def_readwrite("alpha", &MeasureParams::alpha)
      .def_readwrite("beta_sec", &MeasureParams::beta_sec)
      .def_readwrite("penalty", &MeasureParams::penalty);

  m.def("load_manifest", &LoadManifest, py::arg("path"));
  m.def(
      "save_manifest",
      [](const std::filesystem::path& path,
         const std::vector<AnnotatedVideo>& videos) {
        SaveManifest(path, videos);
      },
      py::arg("path"), py::arg("videos"));
  m.def(
      "budget_in_snippets",
      [](int n, double pct) { return BudgetInSnippets(n, pct); },
      py::arg("n_snippets"), py::arg("budget_pct"));

  m.def(
      "score_summary",
      [](const AnnotatedVideo& v, const std::vector<int>& snippets,
         const MeasureParams& params) {
        return ScoreFunction(v, params).Score(snippets);
      },
      py::arg("video"), py::arg("snippets"),
      py::arg("params") = MeasureParams{});
  m.def(
      "decompose_score",
      [](const AnnotatedVideo& v, const std::vector<int>& snippets,
         const MeasureParams& params) {
        const ScoreDecomposition d =
            ScoreFunction(v, params).Decompose(snippets);
        return std::make_pair(d.submodular, d.supermodular);
      },
      py::arg("video"), py::arg("snippets"),
      py::arg("params") = MeasureParams{});
  m.def(
      "score_bounds",
      [](const AnnotatedVideo& v, int budget, const MeasureParams& params) {
        const ScoreBounds b = BoundsFor(ScoreFunction(v, params), budget);
        return std::make_pair(b.s_min, b.s_max);
      },
      py::arg("video"), py::arg("budget"), py::arg("params") = MeasureParams{});
  m.def(
      "score_report",
      [](const AnnotatedVideo& v, const std::vector<int>& snippets, int budget,
         const MeasureParams& params) {
        return ReportToDict(ScoreSummary(v, snippets, budget, params));
      },
      py::arg("video"), py::arg("snippets"), py::arg("budget"),
      py::arg("params") = MeasureParams{});

  m.def(
      "ground_truth",
      [](const AnnotatedVideo& v, int budget, const MeasureParams& params,
         int max_gt, uint64_t seed) {
        return GenerateGroundTruth(v, budget, params, max_gt, seed).summaries;
      },
      py::arg("video"), py::arg("budget"), py::arg("params") = MeasureParams{},
      py::arg("max_gt") = kDefaultMaxGroundTruths, py::arg("seed") = 0);
  m.def(
      "random_summary",
      [](const AnnotatedVideo& v, int budget, const std::string& mode,
         uint64_t seed, const MeasureParams& params) {
        return SampleRandomSummary(ScoreFunction(v, params), budget,
                                   ParseRandomSummaryMode(mode), seed);
      },
      py::arg("video"), py::arg("budget"), py::arg("mode") = "uniform-random",
      py::arg("seed") = 0, py::arg("params") = MeasureParams{});

  m.def(
      "generate_synthetic",
      [](const std::optional<std::filesystem::path>& config_path) {
        return GenerateSyntheticCorpus(config_path
                                           ? LoadSyntheticConfig(*config_path)
                                           : DefaultSyntheticConfig());
      },
      py::arg("config_path") = py::none());

  py::class_<MixtureModel>(m, "Model")
      .def_readonly("domain", &MixtureModel::domain)
      .def_readonly("w1", &MixtureModel::w1)
      .def_readonly("w2", &MixtureModel::w2)
      .def("component_ids", [](const MixtureModel& model) {
        std::vector<std::string> ids;
        for (const ComponentSpec& s : model.components) ids.push_back(s.Id());
        return ids;
      });
  m.def("load_model", &LoadModel, py::arg("path"));
  m.def("save_model", &SaveModel, py::arg("path"), py::arg("model"));
  m.def(
      "train",
      [](const std::vector<AnnotatedVideo>& videos, const std::string& domain,
         int epochs, double budget_pct, uint64_t seed,
         const std::string& variant) {
        std::vector<const AnnotatedVideo*> train;
        for (const AnnotatedVideo& v : videos) {
          if (v.domain == domain) train.push_back(&v);
        }
        if (train.empty()) throw Error("no videos in domain '" + domain + "'");
        TrainingConfig config;
        config.epochs = epochs;
        config.budget_pct = budget_pct;
        config.seed = seed;
        config.Validate();
        const MixtureModel init =
            InitModel(DefaultComponentGrid(*train[0]), *train[0], domain,
                      ParseModelVariant(variant), config);
        py::gil_scoped_release release;
        TrainingResult result = Train(init, train, {}, config);
        py::gil_scoped_acquire acquire;
        return py::make_tuple(result.model, result.record.epoch_hinge);
      },
      py::arg("videos"), py::arg("domain"), py::arg("epochs") = 100,
      py::arg("budget_pct") = 15.0, py::arg("seed") = 0,
      py::arg("variant") = "full");
  m.def(
      "summarize",
      [](const MixtureModel& model, const AnnotatedVideo& v, double budget_pct,
         const MeasureParams& params, const std::string& algorithm,
         uint64_t seed) {
        InferenceOptions options;
        options.algorithm = ParseInferenceAlgorithm(algorithm);
        options.seed = seed;
        return ReportToDict(
            SummarizeVideo(model, v, budget_pct, params, options));
      },
      py::arg("model"), py::arg("video"), py::arg("budget_pct") = 15.0,
      py::arg("params") = MeasureParams{}, py::arg("algorithm") = "greedy",
      py::arg("seed") = 0);

  m.def(
      "verify_bounds",
      [](int case_id, int n, int k, int trials, int random_seeds,
         uint64_t seed) {
        BoundCheckOptions o;
        o.case_id = case_id;
        o.n = n;
        o.k = k;
        o.trials = trials;
        o.random_seeds = random_seeds;
        o.seed = seed;
        const BoundCheckReport r = VerifyBounds(o);
        return py::dict(
            py::arg("case") = r.case_id, py::arg("evaluated") = r.evaluated,
            py::arg("violations") = r.violations,
            py::arg("checked") = r.checked, py::arg("min_ratio") = r.min_ratio,
            py::arg("mean_ratio") = r.mean_ratio,
            py::arg("min_factor") = r.min_factor, py::arg("tag") = r.tag,
            py::arg("text") = FormatBoundReport(r));
      },
      py::arg("case_id"), py::arg("n") = 12, py::arg("k") = 4,
      py::arg("trials") = 200, py::arg("random_seeds") = 50,
      py::arg("seed") = 0);
}

}  // namespace vsumm
