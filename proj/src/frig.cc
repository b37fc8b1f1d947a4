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

#include "gors/frig.h"

#include <algorithm>
#include <vector>

#include "fmt/format.h"
#include "gors/errors.h"

namespace gors {

std::string DisplayName(int index) { return fmt::format("r{}", index + 1); }

Catalog MakeCatalog(std::span<const double> values,
                    std::span<const std::int64_t> costs) {
  if (values.size() != costs.size()) {
    throw ValidationError(fmt::format("{} values but {} costs", values.size(),
                                      costs.size()));
  }
  Catalog catalog;
  catalog.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    catalog.push_back({static_cast<int>(i), "", values[i], costs[i]});
  }
  return catalog;
}

Frig MakeIndependentFrig(Catalog catalog) {
  const std::size_t n = catalog.size();
  return Frig{std::move(catalog), StrengthMatrix(n)};
}

std::string ValidationReport::ToString() const {
  if (ok()) return "valid";
  std::string out;
  for (const FrigViolation& v : violations) {
    if (!out.empty()) out += '\n';
    out += v.message;
  }
  return out;
}

ValidationReport ValidateFrig(const Frig& frig) {
  ValidationReport report;
  auto add = [&](FrigViolation::Kind kind, int row, int col,
                 std::string message) {
    report.violations.push_back({kind, row, col, std::move(message)});
  };

  const int n = static_cast<int>(frig.size());
  for (int i = 0; i < n; ++i) {
    const Requirement& r = frig.requirements[i];
    if (r.id != i) {
      add(FrigViolation::Kind::kBadId, i, -1,
          fmt::format("requirement at position {} has id {} (ids must be "
                      "unique and contiguous)",
                      i + 1, r.id + 1));
    }
    if (!(r.value >= 0.0)) {
      add(FrigViolation::Kind::kNegativeValue, i, -1,
          fmt::format("{}: value {} is negative", DisplayName(i), r.value));
    }
    if (r.cost < 0) {
      add(FrigViolation::Kind::kNegativeCost, i, -1,
          fmt::format("{}: cost {} is negative", DisplayName(i), r.cost));
    }
  }

  if (frig.rho.size() != frig.size()) {
    add(FrigViolation::Kind::kDimensionMismatch, -1, -1,
        fmt::format("strength matrix is {0}x{0} but there are {1} "
                    "requirements",
                    frig.rho.size(), n));
    return report;
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double s = frig.rho(i, j);
      // Written to also catch NaN.
      if (!(s >= 0.0 && s <= 1.0)) {
        add(FrigViolation::Kind::kStrengthOutOfRange, i, j,
            fmt::format("strength of ({},{}) is {}, outside [0,1]",
                        DisplayName(i), DisplayName(j), s));
      } else if (i == j && s != 0.0) {
        add(FrigViolation::Kind::kSelfDependency, i, j,
            fmt::format("{} has an explicit self-dependency of strength {}",
                        DisplayName(i), s));
      }
    }
  }
  return report;
}

void RequireValid(const Frig& frig) {
  ValidationReport report = ValidateFrig(frig);
  if (!report.ok()) throw ValidationError(report.ToString());
}

double PathStrength(const Frig& frig, std::span<const int> path) {
  const int n = static_cast<int>(frig.size());
  if (path.size() < 2) {
    throw PreconditionError("a dependency path needs at least two nodes");
  }
  std::vector<bool> seen(n, false);
  for (int node : path) {
    if (node < 0 || node >= n) {
      throw PreconditionError(fmt::format("path node {} is not in the graph",
                                          node + 1));
    }
    if (seen[node]) {
      throw PreconditionError(
          fmt::format("path visits {} twice", DisplayName(node)));
    }
    seen[node] = true;
  }
  double weakest = 1.0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const double s = frig.rho(path[k - 1], path[k]);
    if (s <= 0.0) {
      throw PreconditionError(fmt::format("no explicit dependency ({},{})",
                                          DisplayName(path[k - 1]),
                                          DisplayName(path[k])));
    }
    weakest = std::min(weakest, s);
  }
  return weakest;
}

// Max over walks equals max over simple paths: every walk contains a simple
// path built from a subset of its edges, whose weakest edge is no weaker.
// Relaxing through each intermediate node in turn therefore yields the
// simple-path optimum.
StrengthClosure Closure(const Frig& frig) {
  RequireValid(frig);
  const std::size_t n = frig.size();
  StrengthMatrix m = frig.rho;
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double via = m(i, k);
      if (via <= 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double s = std::min(via, m(k, j));
        if (s > m(i, j)) m(i, j) = s;
      }
    }
  }
  return StrengthClosure{std::move(m)};
}

StrengthMatrix ComposeMaxMin(const StrengthMatrix& m) {
  const std::size_t n = m.size();
  StrengthMatrix out = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double best = m(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        best = std::max(best, std::min(m(i, k), m(k, j)));
      }
      out(i, j) = best;
    }
  }
  return out;
}

int CountDependencies(const Frig& frig) {
  const std::size_t n = frig.rho.size();
  int k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && frig.rho(i, j) > 0.0) ++k;
    }
  }
  return k;
}

double Loi(const Frig& frig) {
  const std::size_t n = frig.size();
  if (n < 2) {
    throw PreconditionError(
        "level of interdependency needs at least two requirements");
  }
  return static_cast<double>(CountDependencies(frig)) /
         static_cast<double>(n * (n - 1));
}

}  // namespace gors
