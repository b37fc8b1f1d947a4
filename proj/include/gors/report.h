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

#ifndef GORS_REPORT_H_
#define GORS_REPORT_H_

// Text renderings shared by the CLI and the table regeneration command.

#include <filesystem>
#include <string>

#include "gors/frig.h"
#include "gors/solvers.h"

namespace gors {

// Fixed-point with `digits` decimals; never prints "-0.00".
std::string FormatFixed(double x, int digits);

// Header row ",r1,...,rn" then one row per requirement, 4 decimals.
std::string ClosureCsv(const StrengthClosure& closure);

// Every subset ordered by size then lexicographically by members:
// subset,members,AC,AV,OV
std::string SubsetTableCsv(const Frig& frig);

// For each published PMS budget and model: the solver's result next to the
// published vector and the overall value that vector actually evaluates to.
std::string CaseStudyTableCsv();

// Writes closure.csv, subsets.csv and case_study.csv into `dir`.
void ReproduceTables(const std::filesystem::path& dir);

// Human-readable closure matrix.
std::string FormatClosure(const StrengthClosure& closure);

// Multi-line summary: model, budget, vector, members, AC, AV, OV, OV%.
std::string FormatSolveResult(const Frig& frig, const SolveResult& result);

// Multi-line evaluation: vector, AC, AV, OV, per-requirement impacts.
std::string FormatEvaluation(const Frig& frig, const Selection& selection,
                             const Evaluation& evaluation);

}  // namespace gors

#endif  // GORS_REPORT_H_
