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

#ifndef GORS_SOLVERS_H_
#define GORS_SOLVERS_H_

// Exact requirement selection under three models:
//   BKP     maximize accumulated value, dependencies ignored
//   BKP-PC  maximize accumulated value, every edge with strength above a
//           threshold is a hard precedence constraint x_i <= x_j
//   GORS    maximize overall value (dependency-aware)
// All solvers use AC <= budget. Among equal-objective optima the
// lexicographically smallest indicator vector wins (x_1 first, 0 < 1).

#include <cstdint>
#include <string>
#include <string_view>

#include "gors/frig.h"
#include "gors/valuation.h"

namespace gors {

enum class ModelKind { kBkp, kBkpPc, kGors };

struct SelectionModel {
  ModelKind kind = ModelKind::kBkp;
  // BKP-PC only: edges with rho > threshold become constraints.
  double threshold = 0.0;

  static SelectionModel Bkp() { return {ModelKind::kBkp, 0.0}; }
  static SelectionModel BkpPc(double threshold = 0.0) {
    return {ModelKind::kBkpPc, threshold};
  }
  static SelectionModel Gors() { return {ModelKind::kGors, 0.0}; }

  friend bool operator==(const SelectionModel&, const SelectionModel&) = default;
};

// "BKP", "BKP-PC", "GORS".
std::string_view ModelName(ModelKind kind);

// Case-insensitive; accepts "bkp", "bkp-pc" (or "bkppc", "bkp_pc"), "gors".
ModelKind ParseModelKind(std::string_view text);

// Objectives closer than this are treated as ties.
inline constexpr double kObjectiveTolerance = 1e-9;

// Largest instance the brute-force oracle accepts.
inline constexpr std::size_t kBruteForceMaxSize = 20;

// A validated FRIG together with its closure, shared by repeated solves.
class Instance {
 public:
  // Throws ValidationError if `frig` is invalid.
  explicit Instance(Frig frig);

  const Frig& frig() const { return frig_; }
  const Catalog& catalog() const { return frig_.requirements; }
  const StrengthClosure& closure() const { return closure_; }
  std::size_t size() const { return frig_.size(); }

 private:
  Frig frig_;
  StrengthClosure closure_;
};

struct SolveResult {
  Selection selection;
  Evaluation evaluation;
  // AV for BKP and BKP-PC, OV for GORS.
  double objective = 0.0;
  SelectionModel model;
  std::int64_t budget = 0;
  bool optimal = true;
};

// Integer-cost dynamic program. Throws PreconditionError on negative budget.
SolveResult SolveBkp(const Instance& instance, std::int64_t budget);

// Strongly connected components of the constraint graph become all-or-nothing
// groups; the condensed problem is solved by depth-first branch and bound with
// closure propagation.
SolveResult SolveBkpPc(const Instance& instance, std::int64_t budget,
                       double threshold = 0.0);

// Depth-first branch and bound over include/exclude decisions in index
// order. The bound is the partial overall value plus a fractional knapsack
// over the remaining requirements, each discounted by the impact already
// implied by exclusions made so far.
SolveResult SolveGors(const Instance& instance, std::int64_t budget);

SolveResult Solve(const Instance& instance, std::int64_t budget,
                  const SelectionModel& model);

// Enumerates all 2^n subsets. Throws PreconditionError when n exceeds
// kBruteForceMaxSize.
SolveResult SolveBruteForce(const Instance& instance, std::int64_t budget,
                            const SelectionModel& model);

// True if `selection` satisfies every precedence constraint x_i <= x_j with
// rho(i, j) > threshold.
bool SatisfiesPrecedence(const Frig& frig, const Selection& selection,
                         double threshold);

}  // namespace gors

#endif  // GORS_SOLVERS_H_
