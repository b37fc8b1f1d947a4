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

#ifndef GORS_VALUATION_H_
#define GORS_VALUATION_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gors/frig.h"

namespace gors {

// Indicator vector over a catalog; bit i set means requirement i is selected.
// Ordering is lexicographic over (x_1, ..., x_n) with 0 < 1.
class Selection {
 public:
  Selection() = default;
  explicit Selection(std::size_t n) : bits_(n, 0) {}

  static Selection FromIndices(std::size_t n, std::initializer_list<int> selected);
  static Selection FromIndices(std::size_t n, std::span<const int> selected);
  static Selection All(std::size_t n);

  // Accepts "{0,1,1,0}" (the solution-vector format) or a bare "0110".
  // Throws ValidationError on anything else.
  static Selection Parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool on = true) { bits_[i] = on ? 1 : 0; }
  std::size_t count() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  // "{0,0,1,1}"
  std::string ToString() const;
  // "{r3,r4}"
  std::string ToSetString() const;

  friend auto operator<=>(const Selection&, const Selection&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

using ImpactVector = std::vector<double>;

// I_i = max over excluded j of rho_inf(i, j) for selected i, 0 otherwise.
// Uses the closure of the full graph, so paths may pass through selected
// requirements.
ImpactVector ComputeImpacts(const StrengthClosure& closure,
                            const Selection& selection);

// v * (1 - impact). Throws PreconditionError unless impact is in [0, 1].
double CustomerValue(double value, double impact);

struct Accumulation {
  std::int64_t cost = 0;
  double value = 0.0;
};

Accumulation Accumulated(std::span<const Requirement> catalog,
                         const Selection& selection);

// Sum of customer values over selected requirements.
double OverallValue(std::span<const Requirement> catalog,
                    const StrengthClosure& closure, const Selection& selection);

struct Evaluation {
  std::int64_t accumulated_cost = 0;
  double accumulated_value = 0.0;
  double overall_value = 0.0;
  ImpactVector impacts;
};

Evaluation Evaluate(std::span<const Requirement> catalog,
                    const StrengthClosure& closure, const Selection& selection);

double TotalValue(std::span<const Requirement> catalog);
std::int64_t TotalCost(std::span<const Requirement> catalog);

// 100 * part / total, or 0 when total is 0.
double Percent(double part, double total);

struct SdpResult {
  bool occurs = false;
  // 0-based (i, j) with rho(i, j) > 0, first in lexicographic order.
  std::optional<std::pair<int, int>> witness;
};

// Selection deficiency check: some excluded r_i with an explicit dependency
// on an excluded r_j fits in the remaining budget alone but not together
// with r_j. Throws PreconditionError if the selection itself exceeds budget.
SdpResult SdpCheck(const Frig& frig, const Selection& selection,
                   std::int64_t budget);

}  // namespace gors

#endif  // GORS_VALUATION_H_
