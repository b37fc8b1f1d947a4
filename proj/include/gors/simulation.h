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

#ifndef GORS_SIMULATION_H_
#define GORS_SIMULATION_H_

// Budget x LOI sweeps over randomly generated dependency graphs.
//
// Randomness is reproducible across platforms: each (LOI level, replication)
// pair gets a seed derived from the master seed with SplitMix64 mixing, and
// draws come from std::mt19937_64 (whose output sequence is fixed by the
// standard) converted to numbers with our own portable routines rather than
// the implementation-defined std distributions.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gors/frig.h"
#include "gors/solvers.h"

namespace gors {

struct SimulationConfig {
  // "ran", "pmr", another embedded dataset id, or a path to a FRIG JSON file
  // whose catalog is used (its dependencies are ignored).
  std::string dataset = "ran";
  std::vector<double> loi_levels = DefaultLoiLevels();
  std::vector<std::int64_t> budgets = DefaultBudgets();
  int replications = 1;
  std::uint64_t master_seed = 0;
  // Threshold for the BKP-PC runs.
  double precedence_threshold = 0.0;
  // Worker threads; output does not depend on this.
  unsigned threads = 1;

  // 0, 0.1, ..., 1.0
  static std::vector<double> DefaultLoiLevels();
  // 1, 2, ..., 120
  static std::vector<std::int64_t> DefaultBudgets();
};

// Throws PreconditionError on LOI levels outside [0, 1], non-positive
// budgets, or replications < 1.
void ValidateConfig(const SimulationConfig& config);

struct SurfaceCell {
  double loi = 0.0;
  std::int64_t budget = 0;
  ModelKind model = ModelKind::kBkp;
  int replication = 0;
  std::uint64_t seed = 0;
  double av_pct = 0.0;
  double ov_pct = 0.0;

  friend bool operator==(const SurfaceCell&, const SurfaceCell&) = default;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Seed of the graph generated for (loi_index, replication).
std::uint64_t DeriveCellSeed(std::uint64_t master_seed, std::size_t loi_index,
                             int replication);

// Uniform on (0, 1], 53 bits.
double UniformOpenClosed(std::mt19937_64& rng);

// Uniform integer in [0, bound), by rejection. bound > 0.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound);

// Picks round(target_loi * n(n-1)) distinct ordered pairs by a partial
// Fisher-Yates shuffle and gives each a strength uniform on (0, 1].
// Throws PreconditionError unless target_loi is in [0, 1].
Frig GenerateFrig(const Catalog& catalog, double target_loi, std::uint64_t seed);

// Cells ordered by (loi, replication, budget, model).
std::vector<SurfaceCell> RunSweep(const SimulationConfig& config,
                                  const Catalog& catalog);

// Resolves config.dataset first. Throws ValidationError for unknown datasets.
std::vector<SurfaceCell> RunSweep(const SimulationConfig& config);

// Header loi,budget,model,replication,seed,av_pct,ov_pct; percentages with
// four decimals.
void WriteSurfaceCsv(std::ostream& out, std::span<const SurfaceCell> cells);

}  // namespace gors

#endif  // GORS_SIMULATION_H_
