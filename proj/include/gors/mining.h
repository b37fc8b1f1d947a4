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

#ifndef GORS_MINING_H_
#define GORS_MINING_H_

// Mining dependency strengths from user preferences.
//
// eta(i, j) = p(r_i | r_j) = p(r_i, r_j) / p(r_j) over the users of a binary
// preference matrix. A high eta(i, j) means users who want r_j also want r_i,
// read as the value of r_i depending on r_j, so it becomes rho(i, j) after a
// membership mapping.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gors/frig.h"
#include "gors/matrix.h"

namespace gors {

// requirements x users, entries 0/1.
class PreferenceMatrix {
 public:
  // Throws PreconditionError if users == 0.
  PreferenceMatrix(std::size_t requirements, std::size_t users);

  // Throws ValidationError on ragged rows, entries other than 0/1, or no
  // users.
  static PreferenceMatrix FromRows(const std::vector<std::vector<int>>& rows);

  std::size_t requirements() const { return requirements_; }
  std::size_t users() const { return users_; }

  bool prefers(std::size_t requirement, std::size_t user) const {
    return cells_[requirement * users_ + user] != 0;
  }
  void set(std::size_t requirement, std::size_t user, bool on = true) {
    cells_[requirement * users_ + user] = on ? 1 : 0;
  }

 private:
  std::size_t requirements_;
  std::size_t users_;
  std::vector<std::uint8_t> cells_;
};

struct CausalStrengths {
  // Empty where p(r_j) = 0.
  SquareMatrix<std::optional<double>> eta;
  // 0-based columns j never preferred by any user.
  std::vector<int> undefined_columns;
};

CausalStrengths PearlStrength(const PreferenceMatrix& prefs);

class MembershipMapping {
 public:
  enum class Kind { kLinear, kClippedLinear, kSmoothstep };

  static MembershipMapping Linear();
  // Throws PreconditionError unless 0 <= lo < hi <= 1.
  static MembershipMapping ClippedLinear(double lo, double hi);
  static MembershipMapping Smoothstep(double lo, double hi);

  // "linear", "clipped:lo,hi", "smooth:lo,hi".
  static MembershipMapping Parse(std::string_view text);

  Kind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  MembershipMapping(Kind kind, double lo, double hi)
      : kind_(kind), lo_(lo), hi_(hi) {}

  Kind kind_;
  double lo_;
  double hi_;
};

// Maps eta in [0, 1] to a strength in [0, 1]. Clipped and smoothstep send
// eta < lo to 0 and eta >= hi to 1; between them clipped is linear and
// smoothstep is 3t^2 - 2t^3 of the normalized position t.
// Throws PreconditionError if eta is outside [0, 1].
double MapStrength(double eta, const MembershipMapping& mapping);

struct MinedFrig {
  Frig frig;
  std::vector<std::string> warnings;
};

// rho(i, j) = MapStrength(eta(i, j)) off the diagonal. Undefined cells
// become 0 with one warning per never-preferred requirement.
// Throws ValidationError if the catalog and matrix sizes differ.
MinedFrig FrigFromPreferences(const Catalog& catalog,
                              const PreferenceMatrix& prefs,
                              const MembershipMapping& mapping);

}  // namespace gors

#endif  // GORS_MINING_H_
