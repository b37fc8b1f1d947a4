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

#ifndef GORS_TESTS_TEST_SUPPORT_H_
#define GORS_TESTS_TEST_SUPPORT_H_

// Independent oracles and random instance generators for the test suites.
// Nothing here calls the closure, valuation or solver code it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gors/frig.h"
#include "gors/valuation.h"

namespace gors::testing {

// The four-node graph used for the validity and LOI examples.
inline Frig Example1Frig() {
  Frig f;
  for (int i = 0; i < 4; ++i) f.requirements.push_back({i, "", 1.0, 1});
  f.rho = StrengthMatrix(4);
  f.rho(0, 1) = 0.6;
  f.rho(1, 2) = 0.4;
  f.rho(2, 3) = 0.8;
  f.rho(3, 1) = 0.2;
  return f;
}

// Maximum path strength over every simple path from `from` to `to`, found by
// exhaustive depth-first enumeration. 0 when no path exists.
inline double BruteForceOverallStrength(const StrengthMatrix& rho, int from,
                                        int to) {
  const int n = static_cast<int>(rho.size());
  std::vector<bool> on_path(n, false);
  double best = 0.0;
  std::function<void(int, double)> walk = [&](int node, double weakest) {
    if (node == to) {
      best = std::max(best, weakest);
      return;
    }
    on_path[node] = true;
    for (int next = 0; next < n; ++next) {
      if (on_path[next] || rho(node, next) <= 0.0) continue;
      walk(next, std::min(weakest, rho(node, next)));
    }
    on_path[node] = false;
  };
  walk(from, 1.0);
  return best;
}

// Overall value straight from the definitions, closure supplied by the
// brute-force path oracle.
inline double OracleOverallValue(const Frig& frig, const Selection& s) {
  const int n = static_cast<int>(frig.size());
  double ov = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!s.contains(i)) continue;
    double impact = 0.0;
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      impact = std::max(impact, BruteForceOverallStrength(frig.rho, i, j));
    }
    ov += frig.requirements[i].value * (1.0 - impact);
  }
  return ov;
}

struct RandomInstanceOptions {
  int min_size = 2;
  int max_size = 12;
  std::int64_t min_cost = 1;
  std::int64_t max_cost = 20;
  double max_value = 20.0;
  // Probability of each ordered pair carrying an edge; drawn per instance
  // from [0, 1] when negative.
  double density = -1.0;
};

inline Frig RandomFrig(std::mt19937_64& rng,
                       const RandomInstanceOptions& opt = {}) {
  std::uniform_int_distribution<int> size_dist(opt.min_size, opt.max_size);
  std::uniform_int_distribution<std::int64_t> cost_dist(opt.min_cost,
                                                        opt.max_cost);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = size_dist(rng);
  const double density = opt.density < 0.0 ? unit(rng) : opt.density;
  Frig f;
  for (int i = 0; i < n; ++i) {
    f.requirements.push_back({i, "", unit(rng) * opt.max_value, cost_dist(rng)});
  }
  f.rho = StrengthMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && unit(rng) < density) {
        // Strengths on a 0.1 grid make path ties common.
        f.rho(i, j) = std::ceil(unit(rng) * 10.0) / 10.0;
        if (f.rho(i, j) <= 0.0) f.rho(i, j) = 0.1;
      }
    }
  }
  return f;
}

inline Selection RandomSelection(std::mt19937_64& rng, std::size_t n) {
  Selection s(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) s.set(i, coin(rng));
  return s;
}

// Every subset of an n-element catalog in increasing bit-mask order, bit i
// for requirement i.
inline Selection SelectionFromMask(std::size_t n, std::uint64_t mask) {
  Selection s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, (mask >> i) & 1u);
  return s;
}

// Overall strengths by threshold reachability: rho_inf(i, j) is the largest
// edge strength t such that j is reachable from i over edges of strength >= t.
// Diagonal 1.
inline StrengthMatrix ThresholdClosure(const StrengthMatrix& rho) {
  const std::size_t n = rho.size();
  std::vector<double> levels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rho(i, j) > 0.0) levels.push_back(rho(i, j));
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  StrengthMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  for (double t : levels) {
    for (std::size_t src = 0; src < n; ++src) {
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack{src};
      seen[src] = true;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
          if (!seen[v] && rho(u, v) >= t) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (v != src && seen[v]) out(src, v) = std::max(out(src, v), t);
      }
    }
  }
  return out;
}

struct OracleValues {
  std::int64_t cost = 0;
  double accumulated = 0.0;
  double overall = 0.0;
};

inline OracleValues OracleEvaluate(const Frig& frig,
                                   const StrengthMatrix& closure,
                                   const Selection& s) {
  OracleValues out;
  const std::size_t n = frig.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.contains(i)) continue;
    double impact = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!s.contains(j)) impact = std::max(impact, closure(i, j));
    }
    out.cost += frig.requirements[i].cost;
    out.accumulated += frig.requirements[i].value;
    out.overall += frig.requirements[i].value * (1.0 - impact);
  }
  return out;
}

enum class OracleModel { kBkp, kBkpPc, kGors };

// Best objective over all 2^n subsets: AV for the knapsack models (BKP-PC
// also requiring x_i <= x_j whenever rho(i, j) > threshold), OV for GORS.
inline double OracleOptimum(const Frig& frig, std::int64_t budget,
                            OracleModel model, double threshold = 0.0) {
  const std::size_t n = frig.size();
  const StrengthMatrix closure = ThresholdClosure(frig.rho);
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Selection s = SelectionFromMask(n, mask);
    const OracleValues v = OracleEvaluate(frig, closure, s);
    if (v.cost > budget) continue;
    if (model == OracleModel::kBkpPc) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (frig.rho(i, j) > threshold && s.contains(i) && !s.contains(j)) {
            ok = false;
          }
        }
      }
      if (!ok) continue;
    }
    best = std::max(best, model == OracleModel::kGors ? v.overall
                                                      : v.accumulated);
  }
  return best;
}

// Average ranks, ties sharing the mean of their positions.
inline std::vector<double> Ranks(const std::vector<double>& xs) {
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double mean = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean;
    i = j + 1;
  }
  return ranks;
}

// Spearman rank correlation: Pearson correlation of the average ranks.
inline double SpearmanCorrelation(const std::vector<double>& xs,
                                  const std::vector<double>& ys) {
  const std::vector<double> rx = Ranks(xs);
  const std::vector<double> ry = Ranks(ys);
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += rx[i] / n;
    my += ry[i] / n;
  }
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace gors::testing

#endif  // GORS_TESTS_TEST_SUPPORT_H_
