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

#include "vsumm/report.h"

#include <gtest/gtest.h>

namespace vsumm {
namespace {

TEST(StatTest, MeanAndSampleDeviation) {
  const std::vector<double> values = {1.0, 2.0, 3.0, 4.0};
  const Stat s = Stat::Of(values);
  EXPECT_EQ(s.count, 4);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.sd, std::sqrt(5.0 / 3.0));
  const std::vector<double> one = {7.0};
  EXPECT_EQ(Stat::Of(one).sd, 0.0);
  EXPECT_EQ(Stat::Of(std::vector<double>{}).count, 0);
}

ReportTable Sample() {
  ReportTable t;
  t.title = "losses";
  t.columns = {"a", "bb"};
  const std::vector<double> xs = {0.5, 0.25};
  t.rows.push_back({"Full", {Stat::Of(xs), Stat::Of(xs)}, ""});
  t.rows.push_back(
      {"Random-long-label", {Stat::Of(xs), Stat::Of(xs)}, "not minimal"});
  t.notes = {"lower is better"};
  return t;
}

TEST(TableTest, TextLayout) {
  const std::string text = FormatTable(Sample());
  EXPECT_EQ(text.rfind("losses\n", 0), 0u);
  EXPECT_NE(text.find("0.3750 ± 0.1768 (2)"), std::string::npos);
  EXPECT_NE(text.find("[not minimal]"), std::string::npos);
  EXPECT_NE(text.find("note: lower is better"), std::string::npos);
  // Both data rows start their first cell at the same column.
  const size_t full = text.find("Full");
  const size_t full_cell = text.find("0.3750", full);
  const size_t rnd = text.find("Random-long-label");
  const size_t rnd_cell = text.find("0.3750", rnd);
  const size_t full_line = text.rfind('\n', full) + 1;
  const size_t rnd_line = text.rfind('\n', rnd) + 1;
  EXPECT_EQ(full_cell - full_line, rnd_cell - rnd_line);
}

TEST(TableTest, Json) {
  const nlohmann::json j = TableToJson(Sample());
  EXPECT_EQ(j["title"], "losses");
  EXPECT_EQ(j["columns"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["label"], "Full");
  EXPECT_FALSE(j["rows"][0].contains("flag"));
  EXPECT_EQ(j["rows"][1]["flag"], "not minimal");
  EXPECT_DOUBLE_EQ(j["rows"][1]["cells"][0]["mean"].get<double>(), 0.375);
  EXPECT_EQ(j["rows"][1]["cells"][0]["count"], 2);
}

}  // namespace
}  // namespace vsumm
