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

#ifndef GORS_FRIG_H_
#define GORS_FRIG_H_

// Fuzzy requirement interdependency graphs (FRIGs).
//
// A FRIG is a list of requirements plus an n x n matrix of explicit
// value-related dependency strengths. rho(i, j) in [0, 1] is how strongly the
// value of requirement i depends on requirement j being selected; 0 means no
// explicit dependency. All node memberships are 1, so any matrix with entries
// in [0, 1] is a valid fuzzy graph.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gors/matrix.h"

namespace gors {

struct Requirement {
  int id = 0;  // 0-based position in the catalog; shown as r<id+1>.
  std::string label;
  double value = 0.0;
  std::int64_t cost = 0;

  friend bool operator==(const Requirement&, const Requirement&) = default;
};

using Catalog = std::vector<Requirement>;

// "r3" for index 2.
std::string DisplayName(int index);

// Builds a catalog with ids 0..n-1 from parallel value/cost lists.
Catalog MakeCatalog(std::span<const double> values,
                    std::span<const std::int64_t> costs);

struct Frig {
  Catalog requirements;
  StrengthMatrix rho;

  std::size_t size() const { return requirements.size(); }

  friend bool operator==(const Frig&, const Frig&) = default;
};

// An edgeless FRIG over `catalog`.
Frig MakeIndependentFrig(Catalog catalog);

struct FrigViolation {
  enum class Kind {
    kDimensionMismatch,
    kBadId,
    kNegativeValue,
    kNegativeCost,
    kStrengthOutOfRange,
    kSelfDependency,
  };
  Kind kind;
  int row = -1;  // matrix row or requirement index, -1 if not applicable
  int col = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<FrigViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string ToString() const;
};

// Checks every FRIG invariant and lists each violated cell or requirement.
ValidationReport ValidateFrig(const Frig& frig);

// Throws ValidationError carrying the report if `frig` is invalid.
void RequireValid(const Frig& frig);

// A sequence of distinct requirement indices joined by positive-strength
// edges.
using DependencyPath = std::vector<int>;

// Strength of the weakest edge on `path`. Throws PreconditionError if the
// path has fewer than two nodes, repeats a node, leaves the graph or uses a
// zero-strength edge.
double PathStrength(const Frig& frig, std::span<const int> path);

// Overall dependency strengths: rho_inf(i, j) is the strongest path strength
// over all simple paths from i to j. The diagonal is fixed at 1.
struct StrengthClosure {
  StrengthMatrix rho_inf;

  std::size_t size() const { return rho_inf.size(); }
  double operator()(std::size_t i, std::size_t j) const {
    return rho_inf(i, j);
  }
};

// Max-min transitive closure. O(n^3).
StrengthClosure Closure(const Frig& frig);

// One max-min composition step: result(i, j) = max(m(i, j),
// max_k min(m(i, k), m(k, j))). A closure is a fixed point of this step.
StrengthMatrix ComposeMaxMin(const StrengthMatrix& m);

// Number of ordered pairs with a positive explicit strength.
int CountDependencies(const Frig& frig);

// Level of interdependency: CountDependencies / (n * (n - 1)).
// Throws PreconditionError when n < 2.
double Loi(const Frig& frig);

}  // namespace gors

#endif  // GORS_FRIG_H_
