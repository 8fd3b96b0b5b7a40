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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace vsumm {

Stat Stat::Of(std::span<const double> values) {
  Stat s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(sq / (s.count - 1));
  }
  return s;
}

namespace {

std::string Cell(const Stat& s) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f ± %.4f (%d)", s.mean, s.sd, s.count);
  return buf;
}

// Display width, counting each UTF-8 code point once.
size_t Width(const std::string& s) {
  size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

void Pad(std::ostringstream& out, const std::string& s, size_t width) {
  out << s;
  for (size_t i = Width(s); i < width; ++i) out << ' ';
}

}  // namespace

std::string FormatTable(const ReportTable& table) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""};
  header.insert(header.end(), table.columns.begin(), table.columns.end());
  grid.push_back(header);
  bool any_flag = false;
  for (const ReportRow& row : table.rows) {
    std::vector<std::string> line{row.label};
    for (const Stat& s : row.cells) line.push_back(Cell(s));
    grid.push_back(line);
    any_flag = any_flag || !row.flag.empty();
  }
  size_t cols = 0;
  for (const auto& line : grid) cols = std::max(cols, line.size());
  std::vector<size_t> width(cols, 0);
  for (const auto& line : grid) {
    for (size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], Width(line[c]));
    }
  }
  std::ostringstream out;
  if (!table.title.empty()) out << table.title << "\n";
  for (size_t r = 0; r < grid.size(); ++r) {
    for (size_t c = 0; c < cols; ++c) {
      if (c > 0) out << "  ";
      Pad(out, c < grid[r].size() ? grid[r][c] : "", width[c]);
    }
    if (any_flag && r > 0 && !table.rows[r - 1].flag.empty()) {
      out << "  [" << table.rows[r - 1].flag << "]";
    }
    out << "\n";
  }
  for (const std::string& note : table.notes) out << "note: " << note << "\n";
  return out.str();
}

nlohmann::json TableToJson(const ReportTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& row : table.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Stat& s : row.cells) {
      cells.push_back({{"mean", s.mean}, {"sd", s.sd}, {"count", s.count}});
    }
    nlohmann::json r{{"label", row.label}, {"cells", cells}};
    if (!row.flag.empty()) r["flag"] = row.flag;
    rows.push_back(r);
  }
  return {{"title", table.title},
          {"columns", table.columns},
          {"rows", rows},
          {"notes", table.notes}};
}

}  // namespace vsumm
