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

#include "gors/simulation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>
#include <utility>

#include "fmt/format.h"
#include "gors/datasets.h"
#include "gors/errors.h"
#include "gors/io.h"
#include "gors/valuation.h"

namespace gors {
namespace {

constexpr ModelKind kSweepModels[] = {ModelKind::kBkp, ModelKind::kBkpPc,
                                      ModelKind::kGors};

// All cells for one generated graph: budgets x models.
std::vector<SurfaceCell> RunGraph(const SimulationConfig& config,
                                  const Catalog& catalog, std::size_t loi_index,
                                  int replication) {
  const double loi = config.loi_levels[loi_index];
  const std::uint64_t seed =
      DeriveCellSeed(config.master_seed, loi_index, replication);
  const Instance instance(GenerateFrig(catalog, loi, seed));
  const double total = TotalValue(catalog);

  std::vector<SurfaceCell> cells;
  cells.reserve(config.budgets.size() * std::size(kSweepModels));
  for (std::int64_t budget : config.budgets) {
    for (ModelKind kind : kSweepModels) {
      const SelectionModel model{kind, kind == ModelKind::kBkpPc
                                           ? config.precedence_threshold
                                           : 0.0};
      const SolveResult r = Solve(instance, budget, model);
      cells.push_back({loi, budget, kind, replication, seed,
                       Percent(r.evaluation.accumulated_value, total),
                       Percent(r.evaluation.overall_value, total)});
    }
  }
  return cells;
}

}  // namespace

std::vector<double> SimulationConfig::DefaultLoiLevels() {
  std::vector<double> levels;
  for (int i = 0; i <= 10; ++i) levels.push_back(i / 10.0);
  return levels;
}

std::vector<std::int64_t> SimulationConfig::DefaultBudgets() {
  std::vector<std::int64_t> budgets;
  for (std::int64_t b = 1; b <= 120; ++b) budgets.push_back(b);
  return budgets;
}

void ValidateConfig(const SimulationConfig& config) {
  for (double loi : config.loi_levels) {
    if (!(loi >= 0.0 && loi <= 1.0)) {
      throw PreconditionError(fmt::format("LOI level {} is outside [0,1]", loi));
    }
  }
  for (std::int64_t b : config.budgets) {
    if (b <= 0) {
      throw PreconditionError(fmt::format("budget {} is not positive", b));
    }
  }
  if (config.replications < 1) {
    throw PreconditionError(fmt::format("replications must be at least 1, got {}",
                                        config.replications));
  }
  if (!(config.precedence_threshold >= 0.0 &&
        config.precedence_threshold <= 1.0)) {
    throw PreconditionError(fmt::format("precedence threshold {} is outside [0,1]",
                                        config.precedence_threshold));
  }
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveCellSeed(std::uint64_t master_seed, std::size_t loi_index,
                             int replication) {
  std::uint64_t h = SplitMix64(master_seed);
  h = SplitMix64(h ^ static_cast<std::uint64_t>(loi_index));
  h = SplitMix64(h ^ static_cast<std::uint64_t>(replication));
  return h;
}

double UniformOpenClosed(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  // Largest multiple of bound that fits; values at or above it are redrawn.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Frig GenerateFrig(const Catalog& catalog, double target_loi,
                  std::uint64_t seed) {
  if (!(target_loi >= 0.0 && target_loi <= 1.0)) {
    throw PreconditionError(
        fmt::format("target LOI {} is outside [0,1]", target_loi));
  }
  Frig frig = MakeIndependentFrig(catalog);
  const std::size_t n = catalog.size();
  if (n < 2) return frig;

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  const auto k = static_cast<std::size_t>(
      std::llround(target_loi * static_cast<double>(pairs.size())));

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t pick = t + UniformBelow(rng, pairs.size() - t);
    std::swap(pairs[t], pairs[pick]);
    frig.rho(pairs[t].first, pairs[t].second) = UniformOpenClosed(rng);
  }
  return frig;
}

std::vector<SurfaceCell> RunSweep(const SimulationConfig& config,
                                  const Catalog& catalog) {
  ValidateConfig(config);
  RequireValid(MakeIndependentFrig(catalog));
  const std::size_t reps = static_cast<std::size_t>(config.replications);
  const std::size_t jobs = config.loi_levels.size() * reps;

  // Each job owns one slot, so the output order is independent of
  // scheduling.
  std::vector<std::vector<SurfaceCell>> slots(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      slots[job] = RunGraph(config, catalog, job / reps,
                            static_cast<int>(job % reps));
    }
  };

  const unsigned threads =
      std::max(1u, std::min<unsigned>(config.threads,
                                       static_cast<unsigned>(jobs)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<SurfaceCell> cells;
  for (auto& slot : slots) {
    cells.insert(cells.end(), std::make_move_iterator(slot.begin()),
                 std::make_move_iterator(slot.end()));
  }
  return cells;
}

std::vector<SurfaceCell> RunSweep(const SimulationConfig& config) {
  const Frig source = LoadFrigOrDataset(config.dataset);
  return RunSweep(config, source.requirements);
}

void WriteSurfaceCsv(std::ostream& out, std::span<const SurfaceCell> cells) {
  out << "loi,budget,model,replication,seed,av_pct,ov_pct\n";
  for (const SurfaceCell& c : cells) {
    out << fmt::format("{},{},{},{},{},{:.4f},{:.4f}\n", c.loi, c.budget,
                       ModelName(c.model), c.replication, c.seed, c.av_pct,
                       c.ov_pct);
  }
}

}  // namespace gors
