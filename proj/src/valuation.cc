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

#include "gors/valuation.h"

#include <algorithm>
#include <cctype>

#include "fmt/format.h"
#include "gors/errors.h"

namespace gors {
namespace {

void CheckSize(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw PreconditionError(fmt::format(
        "selection has {} entries but the {} has {}", got, what, expected));
  }
}

}  // namespace

Selection Selection::FromIndices(std::size_t n,
                                 std::initializer_list<int> selected) {
  return FromIndices(n, std::span<const int>(selected.begin(), selected.size()));
}

Selection Selection::FromIndices(std::size_t n, std::span<const int> selected) {
  Selection s(n);
  for (int i : selected) {
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
      throw PreconditionError(
          fmt::format("index {} out of range for {} requirements", i, n));
    }
    s.set(i);
  }
  return s;
}

Selection Selection::All(std::size_t n) {
  Selection s(n);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  return s;
}

Selection Selection::Parse(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  const bool braced = body.size() >= 2 && body.front() == '{' && body.back() == '}';
  if (braced) body = body.substr(1, body.size() - 2);

  Selection s;
  bool expect_digit = true;
  for (char ch : body) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '0' || ch == '1') {
      if (braced && !expect_digit) {
        throw ValidationError(
            fmt::format("selection '{}': missing comma between entries", text));
      }
      s.bits_.push_back(ch == '1' ? 1 : 0);
      expect_digit = !braced;
    } else if (ch == ',' && braced && !expect_digit) {
      expect_digit = true;
    } else {
      throw ValidationError(fmt::format(
          "selection '{}': unexpected character '{}' (use {{0,1,...}} or 0101)",
          text, ch));
    }
  }
  if (s.bits_.empty() || (braced && expect_digit)) {
    throw ValidationError(fmt::format("selection '{}' is malformed", text));
  }
  return s;
}

std::size_t Selection::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string Selection::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i > 0) out += ',';
    out += bits_[i] ? '1' : '0';
  }
  out += '}';
  return out;
}

std::string Selection::ToSetString() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) continue;
    if (!first) out += ',';
    out += DisplayName(static_cast<int>(i));
    first = false;
  }
  out += '}';
  return out;
}

ImpactVector ComputeImpacts(const StrengthClosure& closure,
                            const Selection& selection) {
  const std::size_t n = closure.size();
  CheckSize(n, selection.size(), "closure");
  ImpactVector impacts(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!selection.contains(i)) continue;
    double impact = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!selection.contains(j)) impact = std::max(impact, closure(i, j));
    }
    impacts[i] = impact;
  }
  return impacts;
}

double CustomerValue(double value, double impact) {
  if (!(impact >= 0.0 && impact <= 1.0)) {
    throw PreconditionError(
        fmt::format("impact {} is outside [0,1]", impact));
  }
  return value * (1.0 - impact);
}

Accumulation Accumulated(std::span<const Requirement> catalog,
                         const Selection& selection) {
  CheckSize(catalog.size(), selection.size(), "catalog");
  Accumulation acc;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (!selection.contains(i)) continue;
    acc.cost += catalog[i].cost;
    acc.value += catalog[i].value;
  }
  return acc;
}

double OverallValue(std::span<const Requirement> catalog,
                    const StrengthClosure& closure, const Selection& selection) {
  CheckSize(catalog.size(), selection.size(), "catalog");
  const ImpactVector impacts = ComputeImpacts(closure, selection);
  double ov = 0.0;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (selection.contains(i)) ov += CustomerValue(catalog[i].value, impacts[i]);
  }
  return ov;
}

Evaluation Evaluate(std::span<const Requirement> catalog,
                    const StrengthClosure& closure, const Selection& selection) {
  CheckSize(catalog.size(), selection.size(), "catalog");
  Evaluation e;
  const Accumulation acc = Accumulated(catalog, selection);
  e.accumulated_cost = acc.cost;
  e.accumulated_value = acc.value;
  e.impacts = ComputeImpacts(closure, selection);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (selection.contains(i)) {
      e.overall_value += CustomerValue(catalog[i].value, e.impacts[i]);
    }
  }
  return e;
}

double TotalValue(std::span<const Requirement> catalog) {
  double total = 0.0;
  for (const Requirement& r : catalog) total += r.value;
  return total;
}

std::int64_t TotalCost(std::span<const Requirement> catalog) {
  std::int64_t total = 0;
  for (const Requirement& r : catalog) total += r.cost;
  return total;
}

double Percent(double part, double total) {
  return total > 0.0 ? 100.0 * part / total : 0.0;
}

SdpResult SdpCheck(const Frig& frig, const Selection& selection,
                   std::int64_t budget) {
  const Accumulation acc = Accumulated(frig.requirements, selection);
  if (acc.cost > budget) {
    throw PreconditionError(fmt::format(
        "selection costs {} which exceeds the budget {}", acc.cost, budget));
  }
  const std::size_t n = frig.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (selection.contains(i)) continue;
    const std::int64_t with_i = acc.cost + frig.requirements[i].cost;
    if (with_i > budget) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || selection.contains(j) || frig.rho(i, j) <= 0.0) continue;
      if (with_i + frig.requirements[j].cost > budget) {
        return {true, std::pair<int, int>(static_cast<int>(i),
                                          static_cast<int>(j))};
      }
    }
  }
  return {};
}

}  // namespace gors
