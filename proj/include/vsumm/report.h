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

// Result tables rendered as aligned text or JSON.

#ifndef VSUMM_REPORT_H_
#define VSUMM_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vsumm {

// Sample statistics of one table cell.
struct Stat {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, 0 for fewer than 2 values
  int count = 0;

  static Stat Of(std::span<const double> values);
};

struct ReportRow {
  std::string label;
  std::vector<Stat> cells;
  std::string flag;  // free-form marker, e.g. "diagonal not minimal"
};

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
};

// Columns padded to equal width; cells print as "mean ± sd (n)".
std::string FormatTable(const ReportTable& table);
nlohmann::json TableToJson(const ReportTable& table);

}  // namespace vsumm

#endif  // VSUMM_REPORT_H_
