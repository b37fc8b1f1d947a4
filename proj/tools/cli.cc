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

#include "cli.h"

#include <charconv>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmt/format.h"
#include "gors/datasets.h"
#include "gors/errors.h"
#include "gors/frig.h"
#include "gors/io.h"
#include "gors/mining.h"
#include "gors/report.h"
#include "gors/simulation.h"
#include "gors/solvers.h"
#include "gors/valuation.h"

namespace gors::cli {
namespace {

template <typename T>
T ParseNumber(std::string_view text, std::string_view what) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw PreconditionError(fmt::format("{}: '{}' is not a number", what, text));
  }
  return value;
}

std::vector<std::string_view> SplitComma(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos
                                           ? std::string_view::npos
                                           : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

// "0,0.05,0.2"
std::vector<double> ParseLoiLevels(std::string_view text) {
  std::vector<double> levels;
  for (std::string_view part : SplitComma(text)) {
    levels.push_back(ParseNumber<double>(part, "--loi-levels"));
  }
  return levels;
}

// "1..120", "10,20,30" or a mix such as "1..5,50".
std::vector<std::int64_t> ParseBudgets(std::string_view text) {
  std::vector<std::int64_t> budgets;
  for (std::string_view part : SplitComma(text)) {
    const std::size_t dots = part.find("..");
    if (dots == std::string_view::npos) {
      budgets.push_back(ParseNumber<std::int64_t>(part, "--budgets"));
      continue;
    }
    const auto lo = ParseNumber<std::int64_t>(part.substr(0, dots), "--budgets");
    const auto hi = ParseNumber<std::int64_t>(part.substr(dots + 2), "--budgets");
    if (hi < lo) {
      throw PreconditionError(fmt::format("--budgets: empty range '{}'", part));
    }
    for (std::int64_t b = lo; b <= hi; ++b) budgets.push_back(b);
  }
  return budgets;
}

Selection ParseSelectionFor(const Frig& frig, const std::string& text) {
  Selection s = Selection::Parse(text);
  if (s.size() != frig.size()) {
    throw ValidationError(fmt::format(
        "selection has {} entries but the graph has {} requirements", s.size(),
        frig.size()));
  }
  return s;
}

struct Options {
  std::string frig;
  std::string selection;
  std::string model = "gors";
  std::int64_t budget = 0;
  double threshold = 0.0;
  std::string out;

  std::string dataset = "ran";
  std::uint64_t seed = 0;
  std::string loi_levels;
  std::string budgets;
  int replications = 1;
  unsigned threads = 1;

  std::string prefs;
  std::string catalog;
  std::string mapping = "linear";

  std::string dataset_id;
};

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Requirement selection with fuzzy value dependencies (BKP, BKP-PC, "
      "GORS)",
      "gors"};
  app.require_subcommand(1);
  Options o;

  const std::string frig_help =
      "FRIG JSON file or embedded dataset (example3, ran, pmr, pms)";

  auto* closure = app.add_subcommand("closure", "Print the overall strength matrix");
  closure->add_option("frig", o.frig, frig_help)->required();

  auto* loi = app.add_subcommand("loi", "Print the level of interdependency");
  loi->add_option("frig", o.frig, frig_help)->required();

  auto* evaluate = app.add_subcommand(
      "evaluate", "Accumulated cost, accumulated and overall value, impacts");
  evaluate->add_option("frig", o.frig, frig_help)->required();
  evaluate->add_option("--select", o.selection,
                       "Indicator vector, e.g. {1,0,1,0} or 1010")
      ->required();

  auto* select = app.add_subcommand("select", "Solve a selection model exactly");
  select->add_option("frig", o.frig, frig_help)->required();
  select->add_option("--model", o.model, "bkp, bkp-pc or gors")->required();
  select->add_option("--budget", o.budget, "Budget (AC <= budget)")->required();
  select->add_option("--threshold", o.threshold,
                     "BKP-PC: only strengths above this become constraints");

  auto* sdp = app.add_subcommand("sdp", "Check a selection for the selection deficiency problem");
  sdp->add_option("frig", o.frig, frig_help)->required();
  sdp->add_option("--select", o.selection, "Indicator vector")->required();
  sdp->add_option("--budget", o.budget, "Budget")->required();

  auto* sweep = app.add_subcommand("sweep", "Budget x LOI simulation sweep to CSV");
  sweep->add_option("--dataset", o.dataset,
                    "ran, pmr, another dataset id or a FRIG JSON file");
  sweep->add_option("--seed", o.seed, "Master seed")->required();
  sweep->add_option("--loi-levels", o.loi_levels,
                    "Comma-separated LOI levels (default 0,0.1,...,1)");
  sweep->add_option("--budgets", o.budgets,
                    "Budgets as a range and/or list, e.g. 1..120 (default)");
  sweep->add_option("--replications", o.replications, "Graphs per LOI level");
  sweep->add_option("--threshold", o.threshold, "BKP-PC precedence threshold");
  sweep->add_option("--threads", o.threads, "Worker threads");
  sweep->add_option("--out", o.out, "Output CSV")->required();

  auto* mine = app.add_subcommand("mine", "Mine dependency strengths from user preferences");
  mine->add_option("--prefs", o.prefs, "Preference matrix CSV")->required();
  mine->add_option("--catalog", o.catalog,
                   "FRIG JSON or dataset id supplying the requirements")
      ->required();
  mine->add_option("--mapping", o.mapping,
                   "linear, clipped:lo,hi or smooth:lo,hi");
  mine->add_option("--out", o.out, "Output FRIG JSON")->required();

  auto* dataset = app.add_subcommand("dataset", "Export an embedded dataset as FRIG JSON");
  dataset->add_option("id", o.dataset_id, "example3, ran, pmr or pms")->required();
  dataset->add_option("--out", o.out, "Output file (default: stdout)");

  auto* tables = app.add_subcommand("reproduce-tables",
                                    "Write closure.csv, subsets.csv and case_study.csv");
  tables->add_option("--out", o.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (closure->parsed()) {
      out << FormatClosure(Closure(LoadFrigOrDataset(o.frig)));
    } else if (loi->parsed()) {
      const Frig f = LoadFrigOrDataset(o.frig);
      const double value = Loi(f);
      const std::size_t n = f.size();
      out << fmt::format("LOI: {} ({}/{})\n", value, CountDependencies(f),
                         n * (n - 1));
    } else if (evaluate->parsed()) {
      const Frig f = LoadFrigOrDataset(o.frig);
      const Selection s = ParseSelectionFor(f, o.selection);
      out << FormatEvaluation(f, s, Evaluate(f.requirements, Closure(f), s));
    } else if (select->parsed()) {
      const Instance instance(LoadFrigOrDataset(o.frig));
      const SelectionModel model{ParseModelKind(o.model), o.threshold};
      out << FormatSolveResult(instance.frig(),
                               Solve(instance, o.budget, model));
    } else if (sdp->parsed()) {
      const Frig f = LoadFrigOrDataset(o.frig);
      const SdpResult r = SdpCheck(f, ParseSelectionFor(f, o.selection), o.budget);
      if (r.occurs) {
        out << fmt::format("SDP: yes\nwitness: ({},{})\n",
                           DisplayName(r.witness->first),
                           DisplayName(r.witness->second));
      } else {
        out << "SDP: no\n";
      }
    } else if (sweep->parsed()) {
      SimulationConfig config;
      config.dataset = o.dataset;
      config.master_seed = o.seed;
      if (!o.loi_levels.empty()) config.loi_levels = ParseLoiLevels(o.loi_levels);
      if (!o.budgets.empty()) config.budgets = ParseBudgets(o.budgets);
      config.replications = o.replications;
      config.precedence_threshold = o.threshold;
      config.threads = o.threads;
      ValidateConfig(config);
      const std::vector<SurfaceCell> cells = RunSweep(config);
      std::ostringstream csv;
      WriteSurfaceCsv(csv, cells);
      WriteTextFile(o.out, csv.str());
      out << fmt::format("wrote {} cells to {}\n", cells.size(), o.out);
    } else if (mine->parsed()) {
      const Frig catalog = LoadFrigOrDataset(o.catalog);
      const MembershipMapping mapping = MembershipMapping::Parse(o.mapping);
      const MinedFrig mined = FrigFromPreferences(
          catalog.requirements, LoadPreferenceCsv(o.prefs), mapping);
      for (const std::string& w : mined.warnings) err << "warning: " << w << '\n';
      SaveFrig(mined.frig, o.out);
      out << fmt::format("wrote {} dependencies (LOI {}) to {}\n",
                         CountDependencies(mined.frig),
                         mined.frig.size() >= 2 ? fmt::format("{:.4f}", Loi(mined.frig))
                                                : std::string("n/a"),
                         o.out);
    } else if (dataset->parsed()) {
      const Frig f = LoadDataset(o.dataset_id);
      if (o.out.empty()) {
        out << FrigToJson(f);
      } else {
        SaveFrig(f, o.out);
      }
    } else if (tables->parsed()) {
      ReproduceTables(o.out);
      out << fmt::format("wrote closure.csv, subsets.csv, case_study.csv to {}\n", o.out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidData;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace gors::cli
