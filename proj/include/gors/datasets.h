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

#ifndef GORS_DATASETS_H_
#define GORS_DATASETS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gors/frig.h"
#include "gors/solvers.h"

namespace gors {

// Four-requirement worked example with seven explicit dependencies.
Frig Example3Frig();

// Ericsson Radio Access Network catalog: 14 requirements, total cost 99.
Frig RanFrig();

// Ericsson Performance Management Traffic Recording catalog: 11
// requirements, total cost 101.
Frig PmrFrig();

// Precious Messaging System case study: 23 requirements, total value 326,
// total cost 242, 113 explicit dependencies.
Frig PmsFrig();

// "example3", "ran", "pmr", "pms".
std::span<const std::string_view> DatasetIds();

// Throws ValidationError for an unknown id.
Frig LoadDataset(std::string_view id);
bool IsDatasetId(std::string_view id);

// Published PMS solution vectors with their reported overall value (%).
struct ReferenceSolution {
  std::int64_t budget;
  ModelKind model;
  double ov_pct;
  std::string_view vector;
};

std::span<const ReferenceSolution> PmsReferenceSolutions();

// Distinct budgets of PmsReferenceSolutions, ascending.
std::vector<std::int64_t> PmsReferenceBudgets();

}  // namespace gors

#endif  // GORS_DATASETS_H_
