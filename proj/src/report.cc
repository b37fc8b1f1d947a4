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

#include "gors/report.h"

#include <algorithm>
#include <vector>

#include "fmt/format.h"
#include "gors/datasets.h"
#include "gors/errors.h"
#include "gors/io.h"
#include "gors/valuation.h"

namespace gors {
namespace {

std::string PercentLine(const char* name, double value, double total) {
  return fmt::format("{}: {} ({}%)\n", name, FormatFixed(value, 4),
                     FormatFixed(Percent(value, total), 2));
}

}  // namespace

std::string FormatFixed(double x, int digits) {
  std::string s = fmt::format("{:.{}f}", x, digits);
  if (s.front() == '-' &&
      s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string ClosureCsv(const StrengthClosure& closure) {
  const std::size_t n = closure.size();
  std::string out;
  for (std::size_t j = 0; j < n; ++j) {
    out += ',' + DisplayName(static_cast<int>(j));
  }
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += DisplayName(static_cast<int>(i));
    for (std::size_t j = 0; j < n; ++j) out += ',' + FormatFixed(closure(i, j), 4);
    out += '\n';
  }
  return out;
}

std::string SubsetTableCsv(const Frig& frig) {
  const std::size_t n = frig.size();
  if (n > kBruteForceMaxSize) {
    throw PreconditionError(fmt::format(
        "subset table needs at most {} requirements, got {}",
        kBruteForceMaxSize, n));
  }
  const StrengthClosure closure = Closure(frig);
  std::string out = "subset,members,AC,AV,OV\n";
  int row = 0;
  for (std::size_t size = 0; size <= n; ++size) {
    // Membership flags in descending order enumerate combinations with
    // lexicographically increasing members.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      Selection s(n);
      for (std::size_t i = 0; i < n; ++i) s.set(i, pick[i]);
      const Evaluation e = Evaluate(frig.requirements, closure, s);
      out += fmt::format("s{},\"{}\",{},{},{}\n", row++, s.ToSetString(),
                         e.accumulated_cost, FormatFixed(e.accumulated_value, 4),
                         FormatFixed(e.overall_value, 4));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::string CaseStudyTableCsv() {
  const Instance pms(PmsFrig());
  const double total = TotalValue(pms.catalog());
  std::string out =
      "budget,model,av_pct,ov_pct,solution,published_ov_pct,"
      "published_vector_ov_pct,published_solution\n";
  for (const ReferenceSolution& ref : PmsReferenceSolutions()) {
    const SolveResult r =
        Solve(pms, ref.budget, SelectionModel{ref.model, 0.0});
    const Selection published = Selection::Parse(ref.vector);
    const double published_ov =
        OverallValue(pms.catalog(), pms.closure(), published);
    out += fmt::format(
        "{},{},{},{},\"{}\",{},{},\"{}\"\n", ref.budget, ModelName(ref.model),
        FormatFixed(Percent(r.evaluation.accumulated_value, total), 2),
        FormatFixed(Percent(r.evaluation.overall_value, total), 2),
        r.selection.ToString(), FormatFixed(ref.ov_pct, 2),
        FormatFixed(Percent(published_ov, total), 2), published.ToString());
  }
  return out;
}

void ReproduceTables(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw PreconditionError(
        fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  }
  const Frig example = Example3Frig();
  WriteTextFile(dir / "closure.csv", ClosureCsv(Closure(example)));
  WriteTextFile(dir / "subsets.csv", SubsetTableCsv(example));
  WriteTextFile(dir / "case_study.csv", CaseStudyTableCsv());
}

std::string FormatClosure(const StrengthClosure& closure) {
  const std::size_t n = closure.size();
  std::string out = fmt::format("{:<8}", "rho_inf");
  for (std::size_t j = 0; j < n; ++j) {
    out += fmt::format("{:>8}", DisplayName(static_cast<int>(j)));
  }
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += fmt::format("{:<8}", DisplayName(static_cast<int>(i)));
    for (std::size_t j = 0; j < n; ++j) {
      out += fmt::format("{:>8}", FormatFixed(closure(i, j), 4));
    }
    out += '\n';
  }
  return out;
}

std::string FormatSolveResult(const Frig& frig, const SolveResult& result) {
  const double total = TotalValue(frig.requirements);
  std::string out = fmt::format("model: {}\n", ModelName(result.model.kind));
  if (result.model.kind == ModelKind::kBkpPc) {
    out += fmt::format("threshold: {}\n", result.model.threshold);
  }
  out += fmt::format("budget: {}\n", result.budget);
  out += fmt::format("solution: {}\n", result.selection.ToString());
  out += fmt::format("selected: {}\n", result.selection.ToSetString());
  out += fmt::format("AC: {}\n", result.evaluation.accumulated_cost);
  out += PercentLine("AV", result.evaluation.accumulated_value, total);
  out += PercentLine("OV", result.evaluation.overall_value, total);
  out += fmt::format("objective: {}\n", FormatFixed(result.objective, 4));
  return out;
}

std::string FormatEvaluation(const Frig& frig, const Selection& selection,
                             const Evaluation& evaluation) {
  const double total = TotalValue(frig.requirements);
  std::string out = fmt::format("solution: {}\n", selection.ToString());
  out += fmt::format("selected: {}\n", selection.ToSetString());
  out += fmt::format("AC: {}\n", evaluation.accumulated_cost);
  out += PercentLine("AV", evaluation.accumulated_value, total);
  out += PercentLine("OV", evaluation.overall_value, total);
  out += "impacts:\n";
  for (std::size_t i = 0; i < selection.size(); ++i) {
    out += fmt::format("  {:<5} {}{}\n", DisplayName(static_cast<int>(i)),
                       FormatFixed(evaluation.impacts[i], 4),
                       selection.contains(i) ? "" : "  (excluded)");
  }
  return out;
}

}  // namespace gors
