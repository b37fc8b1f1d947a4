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

#ifndef GORS_IO_H_
#define GORS_IO_H_

// File formats.
//
// FRIG JSON:
//   {"requirements": [{"id": 1, "label": "...", "value": 20, "cost": 10}, ...],
//    "dependencies": [{"from": 1, "to": 3, "strength": 0.8}, ...]}
// Ids are 1-based and must cover 1..n. Omitted pairs have strength 0.
//
// Preference CSV:
//   req,u1,u2,...        header; the leading label cell is optional
//   1,0,1,...            one row per requirement id, 0/1 per user

#include <filesystem>
#include <string>
#include <string_view>

#include "gors/frig.h"
#include "gors/mining.h"

namespace gors {

// Throws ValidationError naming the offending element on malformed JSON,
// bad or duplicate ids, unknown ids in dependencies, duplicate edges,
// self-dependencies, or strengths outside [0, 1].
Frig ParseFrigJson(std::string_view text);

// Pretty-printed JSON; doubles are written in shortest round-trip form.
std::string FrigToJson(const Frig& frig);

Frig LoadFrig(const std::filesystem::path& path);
void SaveFrig(const Frig& frig, const std::filesystem::path& path);

// Embedded dataset id if `spec` names one and no such file exists,
// otherwise a FRIG JSON file.
Frig LoadFrigOrDataset(std::string_view spec);

// Rows are placed by requirement id, so they may appear in any order.
PreferenceMatrix ParsePreferenceCsv(std::string_view text);
PreferenceMatrix LoadPreferenceCsv(const std::filesystem::path& path);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace gors

#endif  // GORS_IO_H_
