// Copyright 2026 The GORS Authors
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

#include "gors/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "fmt/format.h"
#include "gors/datasets.h"
#include "gors/errors.h"
#include "json.hpp"

namespace gors {
namespace {

using nlohmann::json;

const json& Field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(fmt::format("{}: missing \"{}\"", where, key));
  }
  return *it;
}

std::int64_t IntegerField(const json& obj, const char* key,
                          const std::string& where) {
  const json& v = Field(obj, key, where);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 9e15) {
      return static_cast<std::int64_t>(d);
    }
  }
  throw ValidationError(
      fmt::format("{}: \"{}\" must be an integer, got {}", where, key, v.dump()));
}

double NumberField(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number()) {
    throw ValidationError(
        fmt::format("{}: \"{}\" must be a number, got {}", where, key, v.dump()));
  }
  return v.get<double>();
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> SplitCells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view cell = line.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t'))
      cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t'))
      cell.remove_suffix(1);
    cells.push_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool ParseInt(std::string_view text, long long& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

}  // namespace

Frig ParseFrigJson(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(fmt::format("malformed FRIG JSON: {}", e.what()));
  }
  if (!root.is_object()) {
    throw ValidationError("FRIG JSON must be an object");
  }
  const json& reqs = Field(root, "requirements", "FRIG");
  if (!reqs.is_array()) {
    throw ValidationError("\"requirements\" must be an array");
  }

  const std::size_t n = reqs.size();
  Catalog catalog(n);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string where = fmt::format("requirements[{}]", k);
    const json& r = reqs[k];
    if (!r.is_object()) throw ValidationError(where + ": must be an object");
    const std::int64_t id = IntegerField(r, "id", where);
    if (id < 1 || id > static_cast<std::int64_t>(n)) {
      throw ValidationError(fmt::format(
          "{}: id {} outside 1..{} (ids must be contiguous)", where, id, n));
    }
    if (seen[id - 1]) {
      throw ValidationError(fmt::format("{}: duplicate id {}", where, id));
    }
    seen[id - 1] = true;
    Requirement& req = catalog[id - 1];
    req.id = static_cast<int>(id - 1);
    if (auto label = r.find("label"); label != r.end() && !label->is_null()) {
      if (!label->is_string()) {
        throw ValidationError(where + ": \"label\" must be a string");
      }
      req.label = label->get<std::string>();
    }
    req.value = NumberField(r, "value", where);
    if (!(req.value >= 0.0)) {
      throw ValidationError(
          fmt::format("{}: value {} is negative", where, req.value));
    }
    req.cost = IntegerField(r, "cost", where);
    if (req.cost < 0) {
      throw ValidationError(
          fmt::format("{}: cost {} is negative", where, req.cost));
    }
  }

  Frig frig{std::move(catalog), StrengthMatrix(n)};
  auto deps = root.find("dependencies");
  if (deps == root.end() || deps->is_null()) return frig;
  if (!deps->is_array()) {
    throw ValidationError("\"dependencies\" must be an array");
  }
  std::set<std::pair<std::int64_t, std::int64_t>> edges;
  for (std::size_t k = 0; k < deps->size(); ++k) {
    const std::string where = fmt::format("dependencies[{}]", k);
    const json& d = (*deps)[k];
    if (!d.is_object()) throw ValidationError(where + ": must be an object");
    const std::int64_t from = IntegerField(d, "from", where);
    const std::int64_t to = IntegerField(d, "to", where);
    for (std::int64_t id : {from, to}) {
      if (id < 1 || id > static_cast<std::int64_t>(n)) {
        throw ValidationError(
            fmt::format("{}: unknown requirement id {}", where, id));
      }
    }
    if (from == to) {
      throw ValidationError(
          fmt::format("{}: self-dependency on r{}", where, from));
    }
    if (!edges.emplace(from, to).second) {
      throw ValidationError(
          fmt::format("{}: duplicate dependency (r{},r{})", where, from, to));
    }
    const double s = NumberField(d, "strength", where);
    if (!(s >= 0.0 && s <= 1.0)) {
      throw ValidationError(fmt::format(
          "{}: strength of (r{},r{}) is {}, outside [0,1]", where, from, to, s));
    }
    frig.rho(from - 1, to - 1) = s;
  }
  return frig;
}

std::string FrigToJson(const Frig& frig) {
  RequireValid(frig);
  nlohmann::ordered_json root;
  root["requirements"] = nlohmann::ordered_json::array();
  for (const Requirement& r : frig.requirements) {
    nlohmann::ordered_json item;
    item["id"] = r.id + 1;
    if (!r.label.empty()) item["label"] = r.label;
    item["value"] = r.value;
    item["cost"] = r.cost;
    root["requirements"].push_back(std::move(item));
  }
  root["dependencies"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < frig.size(); ++i) {
    for (std::size_t j = 0; j < frig.size(); ++j) {
      if (frig.rho(i, j) <= 0.0) continue;
      nlohmann::ordered_json edge;
      edge["from"] = i + 1;
      edge["to"] = j + 1;
      edge["strength"] = frig.rho(i, j);
      root["dependencies"].push_back(std::move(edge));
    }
  }
  return root.dump(2) + "\n";
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError(fmt::format("cannot read '{}'", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw PreconditionError(fmt::format("cannot write '{}'", path.string()));
  }
  out << text;
  if (!out) {
    throw PreconditionError(fmt::format("failed writing '{}'", path.string()));
  }
}

Frig LoadFrig(const std::filesystem::path& path) {
  try {
    return ParseFrigJson(ReadTextFile(path));
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void SaveFrig(const Frig& frig, const std::filesystem::path& path) {
  WriteTextFile(path, FrigToJson(frig));
}

Frig LoadFrigOrDataset(std::string_view spec) {
  const std::filesystem::path path(spec);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) && IsDatasetId(spec)) {
    return LoadDataset(spec);
  }
  return LoadFrig(path);
}

PreferenceMatrix ParsePreferenceCsv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  {
    std::size_t number = 0;
    for (std::string_view line : SplitLines(text)) {
      ++number;
      if (!line.empty()) lines.emplace_back(number, line);
    }
  }
  if (lines.size() < 2) {
    throw ValidationError(
        "preference CSV needs a header row and at least one requirement row");
  }
  const std::size_t header_cells = SplitCells(lines[0].second).size();

  std::vector<std::vector<int>> rows;
  std::vector<bool> seen;
  const std::size_t n = lines.size() - 1;
  rows.resize(n);
  seen.resize(n, false);
  std::size_t users = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [number, line] = lines[k];
    const std::vector<std::string_view> cells = SplitCells(line);
    if (cells.size() < 2) {
      throw ValidationError(
          fmt::format("preference CSV line {}: expected id and 0/1 entries",
                      number));
    }
    if (users == 0) users = cells.size() - 1;
    if (cells.size() - 1 != users) {
      throw ValidationError(fmt::format(
          "preference CSV line {}: {} entries, expected {}", number,
          cells.size() - 1, users));
    }
    long long id = 0;
    if (!ParseInt(cells[0], id) || id < 1 || id > static_cast<long long>(n)) {
      throw ValidationError(fmt::format(
          "preference CSV line {}: requirement id '{}' outside 1..{}", number,
          cells[0], n));
    }
    if (seen[id - 1]) {
      throw ValidationError(fmt::format(
          "preference CSV line {}: duplicate requirement id {}", number, id));
    }
    seen[id - 1] = true;
    std::vector<int>& row = rows[id - 1];
    for (std::size_t u = 1; u < cells.size(); ++u) {
      if (cells[u] != "0" && cells[u] != "1") {
        throw ValidationError(fmt::format(
            "preference CSV line {}, column {}: '{}' is not 0 or 1", number,
            u + 1, cells[u]));
      }
      row.push_back(cells[u] == "1" ? 1 : 0);
    }
  }
  if (header_cells != users && header_cells != users + 1) {
    throw ValidationError(fmt::format(
        "preference CSV header has {} cells for {} users", header_cells, users));
  }
  return PreferenceMatrix::FromRows(rows);
}

PreferenceMatrix LoadPreferenceCsv(const std::filesystem::path& path) {
  try {
    return ParsePreferenceCsv(ReadTextFile(path));
  } catch (const ValidationError& e) {
    throw ValidationError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace gors
