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

// Command line front end: corpus generation, ground truth, scoring,
// training, inference and the experiment suites.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vsumm/bounds.h"
#include "vsumm/corpus.h"
#include "vsumm/error.h"
#include "vsumm/experiments.h"
#include "vsumm/functions.h"
#include "vsumm/gtgen.h"
#include "vsumm/learn.h"
#include "vsumm/measure.h"
#include "vsumm/report.h"
#include "vsumm/synthetic.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void AddMeasureFlags(CLI::App* cmd, vsumm::MeasureParams* params) {
  cmd->add_option("--alpha", params->alpha, "Reward scaling")
      ->capture_default_str();
  cmd->add_option("--beta-sec", params->beta_sec,
                  "Repetitiveness cut-off in seconds")
      ->capture_default_str();
  cmd->add_option("--penalty", params->penalty,
                  "Per-snippet penalty for negative segments")
      ->capture_default_str();
}

void WriteJson(const fs::path& path, const json& doc) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw vsumm::Error("cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

json ReportToJson(const vsumm::SummaryReport& r) {
  json contributions = json::array();
  for (const auto& c : r.contributions) {
    contributions.push_back({{"id", c.id},
                             {"weight", c.weight},
                             {"value", c.value},
                             {"contribution", c.contribution}});
  }
  return {{"video_id", r.video_id},
          {"budget", r.budget},
          {"snippets", r.snippets},
          {"mixture_value", r.mixture_value},
          {"score", r.score},
          {"normalized_score", r.normalized_score},
          {"score_loss", r.score_loss},
          {"s_min", r.bounds.s_min},
          {"s_max", r.bounds.s_max},
          {"guarantee", r.guarantee},
          {"contributions", contributions}};
}

void PrintReport(const vsumm::SummaryReport& r) {
  std::printf("video %s  budget %d  selected %zu\n", r.video_id.c_str(),
              r.budget, r.snippets.size());
  std::printf(
      "score %.6g  normalized %.6f  loss %.6f  (s_min %.6g, s_max "
      "%.6g)\n",
      r.score, r.normalized_score, r.score_loss, r.bounds.s_min,
      r.bounds.s_max);
  if (!r.guarantee.empty()) {
    std::printf("mixture value %.6g  guarantee: %s\n", r.mixture_value,
                r.guarantee.c_str());
  }
  for (const auto& c : r.contributions) {
    std::printf("  %-40s w=%-10.4g f=%-10.4g w*f=%.4g\n", c.id.c_str(),
                c.weight, c.value, c.contribution);
  }
}

vsumm::ExperimentConfig ExperimentConfigFrom(const std::string& path) {
  if (path.empty()) return {};
  return vsumm::LoadExperimentConfig(path);
}

struct ExperimentFlags {
  std::string manifest;
  std::string config;
  std::vector<uint64_t> seeds{0};
  std::string json_out;
  bool check = false;
};

void AddExperimentFlags(CLI::App* cmd, ExperimentFlags* flags) {
  cmd->add_option("--manifest", flags->manifest, "Corpus manifest")->required();
  cmd->add_option("--config", flags->config, "Experiment config file");
  cmd->add_option("--seed", flags->seeds, "Master seed (repeatable)")
      ->capture_default_str();
  cmd->add_option("--json", flags->json_out, "Write the report as JSON");
  cmd->add_flag("--check", flags->check,
                "Exit nonzero if the expected ordering does not hold");
}

int RunGenSynthetic(const std::string& config_path, const std::string& out_dir,
                    const std::string& dump_config) {
  vsumm::SyntheticCorpusConfig config =
      config_path.empty() ? vsumm::DefaultSyntheticConfig()
                          : vsumm::LoadSyntheticConfig(config_path);
  if (!dump_config.empty()) vsumm::SaveSyntheticConfig(dump_config, config);
  if (out_dir.empty()) return 0;
  const auto videos = vsumm::GenerateSyntheticCorpus(config);
  const fs::path manifest = fs::path(out_dir) / "manifest.json";
  vsumm::SaveManifest(manifest, videos);
  std::printf("wrote %zu videos to %s\n", videos.size(),
              manifest.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learned mixtures for video summarization"};
  app.require_subcommand(1);

  // gen-synthetic
  std::string syn_config, syn_out, syn_dump;
  auto* gen_synthetic =
      app.add_subcommand("gen-synthetic", "Write a synthetic corpus");
  gen_synthetic->add_option("--config", syn_config, "Synthetic corpus config");
  gen_synthetic->add_option("--out-dir", syn_out, "Output directory");
  gen_synthetic->add_option("--write-config", syn_dump,
                            "Also write the effective config here");

  // gen-gt
  std::string manifest, video_id, out;
  double budget_pct = 15.0;
  int max_gt = vsumm::kDefaultMaxGroundTruths;
  uint64_t seed = 0;
  vsumm::MeasureParams measure;
  auto* gen_gt = app.add_subcommand("gen-gt", "Generate a ground-truth pool");
  gen_gt->add_option("--manifest", manifest)->required();
  gen_gt->add_option("--video", video_id)->required();
  gen_gt->add_option("--budget-pct", budget_pct)->capture_default_str();
  gen_gt->add_option("--max-gt", max_gt)->capture_default_str();
  gen_gt->add_option("--seed", seed)->capture_default_str();
  gen_gt->add_option("--out", out)->required();
  AddMeasureFlags(gen_gt, &measure);

  // score
  std::string summary_path;
  auto* score = app.add_subcommand("score", "Score a summary file");
  score->add_option("--manifest", manifest)->required();
  score->add_option("--summary", summary_path)->required();
  score->add_option("--video", video_id,
                    "Video id (default: the summary's video_id)");
  score->add_option("--budget-pct", budget_pct,
                    "Budget used for normalization when the summary file "
                    "carries none");
  score->add_option("--json", out, "Write the report as JSON");
  AddMeasureFlags(score, &measure);

  // train
  vsumm::TrainingConfig training;
  std::string domain, grid_path, optimizer = "adagrad", gt_mode = "random",
                                 variant = "full", scaling = "budget";
  auto* train = app.add_subcommand("train", "Train a domain model");
  train->add_option("--manifest", manifest)->required();
  train->add_option("--domain", domain)->required();
  train->add_option("--epochs", training.epochs)->capture_default_str();
  train->add_option("--optimizer", optimizer)
      ->check(CLI::IsMember({"adagrad", "sgd"}))
      ->capture_default_str();
  train->add_option("--lr", training.learning_rate)->capture_default_str();
  train->add_option("--lambda1", training.lambda1)->capture_default_str();
  train->add_option("--lambda2", training.lambda2)->capture_default_str();
  train->add_option("--budget-pct", training.budget_pct)->capture_default_str();
  train->add_option("--gt-mode", gt_mode)
      ->check(CLI::IsMember({"random", "fixed"}))
      ->capture_default_str();
  train->add_option("--max-gt", training.max_gt)->capture_default_str();
  train->add_option("--seed", training.seed)->capture_default_str();
  train->add_option("--variant", variant)
      ->check(CLI::IsMember({"full", "all-modular", "all-submodular"}))
      ->capture_default_str();
  train->add_option("--scaling", scaling)
      ->check(CLI::IsMember({"budget", "none"}))
      ->capture_default_str();
  train->add_option("--grid", grid_path, "Component grid file");
  train->add_option("--out", out)->required();
  AddMeasureFlags(train, &training.measure);

  // summarize
  std::string model_path, algorithm = "greedy", report_path;
  auto* summarize = app.add_subcommand("summarize", "Summarize a video");
  summarize->add_option("--model", model_path)->required();
  summarize->add_option("--manifest", manifest)->required();
  summarize->add_option("--video", video_id)->required();
  summarize->add_option("--budget-pct", budget_pct)->capture_default_str();
  summarize->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"greedy", "best-of-two", "randomized-greedy"}))
      ->capture_default_str();
  summarize->add_option("--seed", seed)->capture_default_str();
  summarize->add_option("--out", out)->required();
  summarize->add_option("--json", report_path, "Write the report as JSON");
  AddMeasureFlags(summarize, &measure);

  // Experiment suites.
  ExperimentFlags exp;
  double margin = 0.0;
  std::vector<std::string> domains;
  auto* baseline = app.add_subcommand("baseline", "Baseline comparison");
  AddExperimentFlags(baseline, &exp);
  baseline->add_option("--domain", domains, "Domains (default: all)");
  baseline
      ->add_option("--margin", margin,
                   "Required lead of Full over every baseline, on the mean "
                   "over domains, for --check")
      ->capture_default_str();

  auto* cross = app.add_subcommand("cross-domain", "Cross-domain matrix");
  AddExperimentFlags(cross, &exp);
  cross->add_option("--domain", domains, "Domains (default: all)");

  auto* ablation = app.add_subcommand("gt-ablation", "Random vs fixed GT");
  AddExperimentFlags(ablation, &exp);
  ablation->add_option("--domain", domains, "Domains (default: all)");

  auto* sanity = app.add_subcommand("gt-sanity", "Ground-truth sanity sweep");
  AddExperimentFlags(sanity, &exp);

  // verify-bounds
  vsumm::BoundCheckOptions bounds;
  bool bounds_check = false;
  auto* verify =
      app.add_subcommand("verify-bounds", "Check approximation guarantees");
  verify->add_option("--case", bounds.case_id)
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  verify->add_option("--n", bounds.n)->capture_default_str();
  verify->add_option("--k", bounds.k)->capture_default_str();
  verify->add_option("--trials", bounds.trials)->capture_default_str();
  verify->add_option("--random-seeds", bounds.random_seeds)
      ->capture_default_str();
  verify->add_option("--seed", bounds.seed)->capture_default_str();
  verify->add_option("--json", out, "Write the report as JSON");
  verify->add_flag("--check", bounds_check, "Exit nonzero on any violation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_synthetic) return RunGenSynthetic(syn_config, syn_out, syn_dump);

    if (*gen_gt) {
      measure.Validate();
      const auto videos = vsumm::LoadManifest(manifest);
      const auto& video = vsumm::FindVideo(videos, video_id);
      const int budget = vsumm::BudgetInSnippets(video, budget_pct);
      const vsumm::ScoreFunction s(video, measure);
      vsumm::GroundTruthPool pool =
          vsumm::GenerateGroundTruth(s, budget, max_gt, seed, video.id);
      const double value = s.Score(pool.summaries.front());
      vsumm::SaveGroundTruthPool(out, pool, value);
      std::printf("%s: %zu summaries of <= %d snippets, score %.6g\n",
                  video.id.c_str(), pool.summaries.size(), budget, value);
      return 0;
    }

    if (*score) {
      measure.Validate();
      const auto videos = vsumm::LoadManifest(manifest);
      const vsumm::SummaryFile file = vsumm::LoadSummary(summary_path);
      const auto& video =
          vsumm::FindVideo(videos, video_id.empty() ? file.video_id : video_id);
      const int budget = file.budget_snippets > 0
                             ? file.budget_snippets
                             : vsumm::BudgetInSnippets(video, budget_pct);
      const vsumm::SummaryReport r =
          vsumm::ScoreSummary(video, file.snippet_indices, budget, measure);
      PrintReport(r);
      if (!out.empty()) WriteJson(out, ReportToJson(r));
      return 0;
    }

    if (*train) {
      training.optimizer = vsumm::ParseOptimizerKind(optimizer);
      training.gt_mode = vsumm::ParseGtMode(gt_mode);
      training.scaling = vsumm::ParseFeatureScaling(scaling);
      training.Validate();
      const auto videos = vsumm::LoadManifest(manifest);
      std::vector<const vsumm::AnnotatedVideo*> members;
      for (const auto& v : videos) {
        if (v.domain == domain) members.push_back(&v);
      }
      if (members.empty()) throw vsumm::Error("no videos in domain " + domain);
      const std::vector<vsumm::ComponentSpec> grid =
          grid_path.empty() ? vsumm::DefaultComponentGrid(*members.front())
                            : vsumm::LoadComponentGrid(grid_path);
      vsumm::MixtureModel model =
          vsumm::InitModel(grid, *members.front(), domain,
                           vsumm::ParseModelVariant(variant), training);
      const vsumm::TrainingResult result =
          vsumm::Train(std::move(model), members, {}, training);
      const auto& rec = result.record;
      const int epochs = static_cast<int>(rec.epoch_hinge.size());
      const int stride = epochs > 20 ? epochs / 10 : 1;
      for (int e = 0; e < epochs; ++e) {
        if (e % stride != 0 && e + 1 != epochs) continue;
        std::printf("epoch %4d  hinge %.6f  violations %d  min w2 %.4g\n",
                    e + 1, rec.epoch_hinge[e], rec.epoch_violations[e],
                    rec.epoch_min_w2[e]);
      }
      std::printf("greedy violations: %d\n", rec.total_violations);
      vsumm::SaveModel(out, result.model);
      return 0;
    }

    if (*summarize) {
      measure.Validate();
      const vsumm::MixtureModel model = vsumm::LoadModel(model_path);
      const auto videos = vsumm::LoadManifest(manifest);
      const auto& video = vsumm::FindVideo(videos, video_id);
      vsumm::InferenceOptions options;
      options.algorithm = vsumm::ParseInferenceAlgorithm(algorithm);
      options.seed = seed;
      const vsumm::SummaryReport r =
          vsumm::SummarizeVideo(model, video, budget_pct, measure, options);
      vsumm::SaveSummary(out, {r.video_id, r.budget, r.snippets});
      PrintReport(r);
      if (!report_path.empty()) WriteJson(report_path, ReportToJson(r));
      return 0;
    }

    if (*baseline || *cross || *ablation || *sanity) {
      const vsumm::ExperimentConfig config = ExperimentConfigFrom(exp.config);
      config.Validate();
      const auto videos = vsumm::LoadManifest(exp.manifest);
      if (domains.empty()) domains = vsumm::DomainsOf(videos);
      json doc = json::array();
      bool ok = true;
      for (uint64_t s : exp.seeds) {
        if (*baseline) {
          std::map<std::string, double> pooled;
          for (const std::string& d : domains) {
            const vsumm::BaselineResult r =
                vsumm::RunBaselines(videos, d, config, s);
            std::cout << vsumm::FormatTable(r.table) << "\n";
            doc.push_back({{"seed", s},
                           {"domain", d},
                           {"table", vsumm::TableToJson(r.table)},
                           {"mean_loss", r.mean_loss}});
            for (const auto& [method, loss] : r.mean_loss) {
              pooled[method] += loss / static_cast<double>(domains.size());
            }
          }
          // Judged on the mean over domains, as each domain has only a
          // handful of test videos.
          const double full = pooled.at(vsumm::kMethodFull);
          std::printf("seed %llu pooled:", static_cast<unsigned long long>(s));
          for (const auto& [method, loss] : pooled) {
            std::printf(" %s=%.4f", method.c_str(), loss);
          }
          std::printf("\n");
          for (const char* other :
               {vsumm::kMethodModular, vsumm::kMethodSubmodular,
                vsumm::kMethodRandom, vsumm::kMethodUniform}) {
            if (!(full + margin <= pooled.at(other))) ok = false;
          }
        } else if (*cross) {
          const vsumm::CrossDomainResult r =
              vsumm::RunCrossDomain(videos, domains, config, s);
          std::cout << vsumm::FormatTable(r.table) << "\n";
          doc.push_back({{"seed", s}, {"table", vsumm::TableToJson(r.table)}});
          for (bool minimal : r.diagonal_minimal) ok = ok && minimal;
        } else if (*ablation) {
          for (const std::string& d : domains) {
            const vsumm::GtAblationResult r =
                vsumm::RunGtAblation(videos, d, config, s);
            std::cout << vsumm::FormatTable(r.table) << "\n";
            doc.push_back({{"seed", s},
                           {"domain", d},
                           {"table", vsumm::TableToJson(r.table)},
                           {"random_gt_loss", r.random_gt_loss},
                           {"fixed_gt_loss", r.fixed_gt_loss}});
            ok = ok && r.random_gt_loss <= r.fixed_gt_loss;
          }
        } else {
          const vsumm::GtSanityResult r = vsumm::RunGtSanity(videos, config, s);
          std::cout << vsumm::FormatTable(r.table) << "\n";
          doc.push_back({{"seed", s},
                         {"table", vsumm::TableToJson(r.table)},
                         {"tie_failures", r.tie_failures},
                         {"dominance_failures", r.dominance_failures},
                         {"flagged", r.flagged}});
          ok = ok && r.tie_failures == 0 && r.dominance_failures == 0;
        }
      }
      if (!exp.json_out.empty()) WriteJson(exp.json_out, doc);
      if (exp.check) {
        std::printf("check: %s\n", ok ? "PASS" : "FAIL");
        return ok ? 0 : 1;
      }
      return 0;
    }

    if (*verify) {
      const vsumm::BoundCheckReport r = vsumm::VerifyBounds(bounds);
      std::printf("%s\n", vsumm::FormatBoundReport(r).c_str());
      if (!out.empty()) {
        WriteJson(out, {{"case", r.case_id},
                        {"n", r.n},
                        {"k", r.k},
                        {"trials", r.trials},
                        {"evaluated", r.evaluated},
                        {"skipped", r.skipped},
                        {"violations", r.violations},
                        {"checked", r.checked},
                        {"min_factor", r.min_factor},
                        {"mean_factor", r.mean_factor},
                        {"min_ratio", r.min_ratio},
                        {"mean_ratio", r.mean_ratio},
                        {"min_slack", r.min_slack},
                        {"algorithm", r.algorithm},
                        {"guarantee", r.guarantee},
                        {"tag", r.tag},
                        {"note", r.note}});
      }
      if (bounds_check && r.checked && r.violations > 0) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
