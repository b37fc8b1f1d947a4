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

#include "gors/mining.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "fmt/format.h"
#include "gors/errors.h"

namespace gors {
namespace {

double ParseUnit(std::string_view text, std::string_view spec) {
  double x = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw PreconditionError(
        fmt::format("mapping '{}': '{}' is not a number", spec, text));
  }
  return x;
}

void CheckInterval(double lo, double hi) {
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) {
    throw PreconditionError(fmt::format(
        "mapping interval [{}, {}] must satisfy 0 <= lo < hi <= 1", lo, hi));
  }
}

}  // namespace

PreferenceMatrix::PreferenceMatrix(std::size_t requirements, std::size_t users)
    : requirements_(requirements),
      users_(users),
      cells_(requirements * users, 0) {
  if (users == 0) {
    throw PreconditionError("a preference matrix needs at least one user");
  }
}

PreferenceMatrix PreferenceMatrix::FromRows(
    const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw ValidationError("preference matrix has no users");
  }
  PreferenceMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.users()) {
      throw ValidationError(fmt::format(
          "preference row {} has {} entries, expected {}", i + 1,
          rows[i].size(), m.users()));
    }
    for (std::size_t u = 0; u < m.users(); ++u) {
      const int v = rows[i][u];
      if (v != 0 && v != 1) {
        throw ValidationError(fmt::format(
            "preference ({}, user {}) is {}, expected 0 or 1", DisplayName(i),
            u + 1, v));
      }
      m.set(i, u, v == 1);
    }
  }
  return m;
}

CausalStrengths PearlStrength(const PreferenceMatrix& prefs) {
  const std::size_t n = prefs.requirements();
  const std::size_t users = prefs.users();
  std::vector<int> count(n, 0);
  SquareMatrix<int> together(n, 0);
  for (std::size_t u = 0; u < users; ++u) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!prefs.prefers(i, u)) continue;
      ++count[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (prefs.prefers(j, u)) ++together(i, j);
      }
    }
  }

  // p(i, j) / p(j) with both probabilities over the same users, so the
  // user count cancels.
  CausalStrengths out{SquareMatrix<std::optional<double>>(n), {}};
  for (std::size_t j = 0; j < n; ++j) {
    if (count[j] == 0) {
      out.undefined_columns.push_back(static_cast<int>(j));
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      out.eta(i, j) = static_cast<double>(together(i, j)) / count[j];
    }
  }
  return out;
}

MembershipMapping MembershipMapping::Linear() {
  return MembershipMapping(Kind::kLinear, 0.0, 1.0);
}

MembershipMapping MembershipMapping::ClippedLinear(double lo, double hi) {
  CheckInterval(lo, hi);
  return MembershipMapping(Kind::kClippedLinear, lo, hi);
}

MembershipMapping MembershipMapping::Smoothstep(double lo, double hi) {
  CheckInterval(lo, hi);
  return MembershipMapping(Kind::kSmoothstep, lo, hi);
}

MembershipMapping MembershipMapping::Parse(std::string_view text) {
  if (text == "linear") return Linear();
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  if (colon == std::string_view::npos || (name != "clipped" && name != "smooth")) {
    throw PreconditionError(fmt::format(
        "unknown mapping '{}' (expected linear, clipped:lo,hi or smooth:lo,hi)",
        text));
  }
  const std::string_view args = text.substr(colon + 1);
  const auto comma = args.find(',');
  if (comma == std::string_view::npos) {
    throw PreconditionError(
        fmt::format("mapping '{}' needs two bounds lo,hi", text));
  }
  const double lo = ParseUnit(args.substr(0, comma), text);
  const double hi = ParseUnit(args.substr(comma + 1), text);
  return name == "clipped" ? ClippedLinear(lo, hi) : Smoothstep(lo, hi);
}

double MapStrength(double eta, const MembershipMapping& mapping) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw PreconditionError(fmt::format("causal strength {} is outside [0,1]", eta));
  }
  if (mapping.kind() == MembershipMapping::Kind::kLinear) return eta;
  if (eta < mapping.lo()) return 0.0;
  if (eta >= mapping.hi()) return 1.0;
  const double t = (eta - mapping.lo()) / (mapping.hi() - mapping.lo());
  if (mapping.kind() == MembershipMapping::Kind::kClippedLinear) return t;
  return t * t * (3.0 - 2.0 * t);
}

MinedFrig FrigFromPreferences(const Catalog& catalog,
                              const PreferenceMatrix& prefs,
                              const MembershipMapping& mapping) {
  const std::size_t n = catalog.size();
  if (prefs.requirements() != n) {
    throw ValidationError(fmt::format(
        "preference matrix has {} requirements but the catalog has {}",
        prefs.requirements(), n));
  }
  const CausalStrengths eta = PearlStrength(prefs);
  MinedFrig out{MakeIndependentFrig(catalog), {}};
  for (int j : eta.undefined_columns) {
    out.warnings.push_back(fmt::format(
        "{} is preferred by no user; dependencies on it are set to 0",
        DisplayName(j)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !eta.eta(i, j).has_value()) continue;
      out.frig.rho(i, j) = MapStrength(*eta.eta(i, j), mapping);
    }
  }
  return out;
}

}  // namespace gors
