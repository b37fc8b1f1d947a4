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

#include "gors/datasets.h"

#include <algorithm>
#include <array>

#include "fmt/format.h"
#include "gors/errors.h"

namespace gors {
namespace {

Frig FromTables(std::span<const double> values,
                std::span<const std::int64_t> costs) {
  return MakeIndependentFrig(MakeCatalog(values, costs));
}

void AddEdge(Frig& f, int from_1based, int to_1based, double strength) {
  f.rho(from_1based - 1, to_1based - 1) = strength;
}

// Precious Messaging System, median stakeholder estimates.
constexpr double kPmsValues[] = {20, 20, 6, 17, 3, 20, 15, 8, 20, 16, 20, 10, 8, 5, 8, 10, 15, 10, 20, 20, 15, 20, 20};
constexpr std::int64_t kPmsCosts[] = {10, 7, 1, 10, 12, 20, 6, 14, 15, 10, 4, 6, 5, 12, 15, 3, 12, 3, 20, 20, 12, 15, 10};
// Row i lists rho(r_i, r_1..r_23).
constexpr double kPmsStrengths[23][23] = {
    {0.0, 0.0, 0.0, 0.5, 0.3, 0.0, 0.6, 0.4, 0.0, 0.0, 0.0, 0.7, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.1, 0.0, 0.3},
    {1.0, 0.0, 0.0, 0.6, 0.6, 0.0, 0.6, 0.6, 0.0, 0.3, 0.3, 0.7, 0.0, 0.3, 0.0, 0.7, 0.0, 0.0, 0.0, 0.0, 0.2, 0.0, 0.8},
    {1.0, 0.0, 0.0, 0.5, 0.3, 0.0, 0.6, 0.0, 0.0, 0.0, 0.0, 0.7, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.9, 0.0, 0.0, 0.4, 0.0, 0.7, 0.0, 0.0, 0.0, 0.0, 0.2, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.6, 0.0, 0.3, 0.3, 0.4, 0.0, 0.0, 0.0, 0.0, 0.7, 0.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.0, 0.7, 0.0, 0.0, 0.0, 0.7, 0.0, 0.3, 0.0, 0.0, 0.8, 0.2, 0.4, 0.0, 0.2, 0.7, 0.0, 0.0, 0.0, 0.0, 0.2, 0.0, 0.0},
    {0.0, 0.7, 0.0, 0.0, 0.3, 0.7, 0.0, 0.3, 0.0, 0.0, 0.0, 0.3, 0.4, 0.0, 0.0, 0.2, 0.0, 0.0, 0.0, 0.0, 0.2, 0.6, 0.0},
    {0.0, 0.0, 0.0, 0.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.4, 0.0, 0.0, 0.0, 0.2, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.5, 0.8, 0.0, 0.0, 0.0, 0.1, 0.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.4, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 0.1, 0.4, 0.0, 0.0, 0.0, 0.0, 0.1, 0.6, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {1.0, 0.3, 0.0, 0.7, 0.5, 1.0, 0.6, 0.5, 1.0, 0.6, 0.4, 0.0, 0.0, 0.1, 0.8, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8},
    {1.0, 0.3, 0.0, 0.7, 0.5, 1.0, 0.6, 0.5, 1.0, 0.6, 0.4, 0.0, 0.0, 0.1, 0.8, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 0.1, 0.8, 0.2, 0.0, 0.0, 0.0, 0.0, 0.3, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
};

constexpr ReferenceSolution kPmsReference[] = {
    {16, ModelKind::kBkp, 5.21, "01100000001000010000000"},
    {16, ModelKind::kBkpPc, 10.74, "00000010000000000000001"},
    {16, ModelKind::kGors, 12.88, "00000010001000010100000"},
    {46, ModelKind::kBkp, 23.25, "11100010001000010100001"},
    {46, ModelKind::kBkpPc, 19.94, "00000010000000000100011"},
    {46, ModelKind::kGors, 26.63, "00000010001010010100011"},
    {71, ModelKind::kBkp, 31.07, "11110010011100010100001"},
    {71, ModelKind::kBkpPc, 19.94, "00000010000000000100011"},
    {71, ModelKind::kGors, 34.60, "11100010001110010100011"},
    {76, ModelKind::kBkp, 32.06, "11110010011110010100001"},
    {76, ModelKind::kBkpPc, 19.94, "00000010000000000100011"},
    {76, ModelKind::kGors, 35.74, "11110010001100010100011"},
    {81, ModelKind::kBkp, 31.90, "11110010011010011100001"},
    {81, ModelKind::kBkpPc, 19.94, "00000010000000000100011"},
    {81, ModelKind::kGors, 37.98, "00010000001001011100111"},
    {141, ModelKind::kBkp, 44.11, "11110010111110011101011"},
    {141, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {141, ModelKind::kGors, 59.45, "11110010011111111100111"},
    {146, ModelKind::kBkp, 45.40, "11110010111100011101111"},
    {146, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {146, ModelKind::kGors, 60.43, "11110011001111111100111"},
    {151, ModelKind::kBkp, 46.87, "11110010111110011101111"},
    {151, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {151, ModelKind::kGors, 62.27, "11110110001111111100111"},
    {156, ModelKind::kBkp, 46.87, "11110010111110011101111"},
    {156, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {156, ModelKind::kGors, 62.27, "11110110001111111100111"},
    {161, ModelKind::kBkp, 50.12, "11110110111110011101011"},
    {161, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {161, ModelKind::kGors, 64.23, "11110110011111111100111"},
    {166, ModelKind::kBkp, 51.41, "11110110111100011101111"},
    {166, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {166, ModelKind::kGors, 64.72, "11110110101111111100111"},
    {171, ModelKind::kBkp, 52.88, "11110110111110011101111"},
    {171, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {171, ModelKind::kGors, 64.72, "11110110101111111100111"},
    {176, ModelKind::kBkp, 52.88, "11110110111110011101111"},
    {176, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {176, ModelKind::kGors, 66.69, "11110111011111111100111"},
    {181, ModelKind::kBkp, 51.35, "11110110111110011111011"},
    {181, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {181, ModelKind::kGors, 67.18, "11110111101111111100111"},
    {186, ModelKind::kBkp, 52.64, "11110110111100011111111"},
    {186, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {186, ModelKind::kGors, 73.83, "11011111111111011100111"},
    {191, ModelKind::kBkp, 54.11, "11110110111110011111111"},
    {191, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {191, ModelKind::kGors, 75.31, "11111111111111011100111"},
    {196, ModelKind::kBkp, 54.11, "11110110111110011111111"},
    {196, ModelKind::kBkpPc, 53.37, "00011011001011111100111"},
    {196, ModelKind::kGors, 75.31, "11111111111111011100111"},
    {246, ModelKind::kBkp, 100.00, "11111111111111111111111"},
    {246, ModelKind::kBkpPc, 100.00, "11111111111111111111111"},
    {246, ModelKind::kGors, 100.00, "11111111111111111111111"},
};

constexpr std::array<std::string_view, 4> kDatasetIds = {"example3", "ran",
                                                         "pmr", "pms"};

}  // namespace

Frig Example3Frig() {
  constexpr double kValues[] = {20, 10, 50, 10};
  constexpr std::int64_t kCosts[] = {10, 10, 15, 10};
  Frig f = FromTables(kValues, kCosts);
  AddEdge(f, 1, 2, 0.4);
  AddEdge(f, 1, 3, 0.8);
  AddEdge(f, 2, 4, 0.3);
  AddEdge(f, 3, 1, 0.8);
  AddEdge(f, 3, 2, 0.6);
  AddEdge(f, 3, 4, 0.8);
  AddEdge(f, 4, 3, 0.2);
  return f;
}

Frig RanFrig() {
  constexpr double kValues[] = {12, 6, 5, 7, 12, 16, 3, 3, 4, 5, 1, 1, 21, 3};
  constexpr std::int64_t kCosts[] = {1, 2, 3, 4, 6, 11, 4, 6, 7, 12, 4, 6, 23, 10};
  return FromTables(kValues, kCosts);
}

Frig PmrFrig() {
  constexpr double kValues[] = {0, 6, 3, 11, 32, 20, 9, 4, 25, 9, 3};
  constexpr std::int64_t kCosts[] = {6, 5, 6, 19, 28, 4, 5, 7, 10, 3, 8};
  return FromTables(kValues, kCosts);
}

Frig PmsFrig() {
  Frig f = FromTables(kPmsValues, kPmsCosts);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      f.rho(i, j) = kPmsStrengths[i][j];
    }
  }
  return f;
}

std::span<const std::string_view> DatasetIds() { return kDatasetIds; }

bool IsDatasetId(std::string_view id) {
  return std::find(kDatasetIds.begin(), kDatasetIds.end(), id) !=
         kDatasetIds.end();
}

Frig LoadDataset(std::string_view id) {
  if (id == "example3") return Example3Frig();
  if (id == "ran") return RanFrig();
  if (id == "pmr") return PmrFrig();
  if (id == "pms") return PmsFrig();
  throw ValidationError(fmt::format(
      "unknown dataset '{}' (expected one of: example3, ran, pmr, pms)", id));
}

std::span<const ReferenceSolution> PmsReferenceSolutions() {
  return kPmsReference;
}

std::vector<std::int64_t> PmsReferenceBudgets() {
  std::vector<std::int64_t> budgets;
  for (const ReferenceSolution& row : kPmsReference) {
    if (budgets.empty() || budgets.back() != row.budget) {
      budgets.push_back(row.budget);
    }
  }
  return budgets;
}

}  // namespace gors
