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

#include "gors/solvers.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fmt/format.h"
#include "gors/errors.h"

namespace gors {
namespace {

void CheckBudget(std::int64_t budget) {
  if (budget < 0) {
    throw PreconditionError(fmt::format("budget {} is negative", budget));
  }
}

void CheckThreshold(double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw PreconditionError(
        fmt::format("precedence threshold {} is outside [0,1]", threshold));
  }
}

SolveResult MakeResult(const Instance& instance, Selection selection,
                       const SelectionModel& model, std::int64_t budget) {
  SolveResult r;
  r.evaluation = Evaluate(instance.catalog(), instance.closure(), selection);
  r.objective = model.kind == ModelKind::kGors
                    ? r.evaluation.overall_value
                    : r.evaluation.accumulated_value;
  r.selection = std::move(selection);
  r.model = model;
  r.budget = budget;
  return r;
}

struct KnapsackItem {
  double value;
  std::int64_t cost;
};

// Linear relaxation of a 0/1 knapsack; reorders `items`.
double FractionalBound(std::vector<KnapsackItem>& items,
                       std::int64_t capacity) {
  // Worthless items would break the ratio ordering below.
  std::erase_if(items, [](const KnapsackItem& it) { return it.value <= 0.0; });
  std::sort(items.begin(), items.end(),
            [](const KnapsackItem& a, const KnapsackItem& b) {
              // a.value / a.cost > b.value / b.cost, zero costs first.
              return a.value * static_cast<double>(b.cost) >
                     b.value * static_cast<double>(a.cost);
            });
  double total = 0.0;
  std::int64_t room = capacity;
  for (const KnapsackItem& item : items) {
    if (item.cost <= room) {
      total += item.value;
      room -= item.cost;
    } else {
      total += item.value * static_cast<double>(room) /
               static_cast<double>(item.cost);
      break;
    }
  }
  return total;
}

// Iterative Tarjan. Returns the component id of every node; ids are
// assigned in reverse topological order of the condensation.
std::vector<int> StronglyConnectedComponents(
    const std::vector<std::vector<int>>& adj, int* num_components) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // node, next edge
  int counter = 0;
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  *num_components = components;
  return comp;
}

// 0/1 knapsack over all-or-nothing groups with "group g requires group h"
// constraints, closed under transitivity. Groups are branched on in order of
// their smallest member, excluding first, so leaves are visited in
// lexicographic order of the requirement vector and the first optimum found
// is the lexicographically smallest.
class PrecedenceKnapsack {
 public:
  PrecedenceKnapsack(const Catalog& catalog,
                     const std::vector<std::vector<int>>& requires_edges,
                     std::int64_t budget)
      : n_(static_cast<int>(catalog.size())), budget_(budget) {
    int num_groups = 0;
    group_of_ = StronglyConnectedComponents(requires_edges, &num_groups);
    groups_.resize(num_groups);
    for (int i = 0; i < n_; ++i) {
      Group& g = groups_[group_of_[i]];
      if (g.members.empty()) g.first = i;
      g.members.push_back(i);
      g.cost += catalog[i].cost;
      g.value += catalog[i].value;
    }

    std::vector<std::vector<int>> group_adj(num_groups);
    for (int i = 0; i < n_; ++i) {
      for (int j : requires_edges[i]) {
        if (group_of_[i] != group_of_[j]) {
          group_adj[group_of_[i]].push_back(group_of_[j]);
        }
      }
    }
    // Transitive requirements and their inverse.
    requires_.assign(num_groups, {});
    required_by_.assign(num_groups, {});
    for (int g = 0; g < num_groups; ++g) {
      std::vector<bool> seen(num_groups, false);
      std::vector<int> todo = {g};
      seen[g] = true;
      while (!todo.empty()) {
        const int h = todo.back();
        todo.pop_back();
        for (int k : group_adj[h]) {
          if (!seen[k]) {
            seen[k] = true;
            todo.push_back(k);
            requires_[g].push_back(k);
            required_by_[k].push_back(g);
          }
        }
      }
    }

    order_.resize(num_groups);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return groups_[a].first < groups_[b].first;
    });
    status_.assign(num_groups, kFree);
    best_status_.assign(num_groups, kOut);
  }

  Selection Solve() {
    Search(0);
    Selection s(n_);
    for (int i = 0; i < n_; ++i) s.set(i, best_status_[group_of_[i]] == kIn);
    return s;
  }

 private:
  static constexpr signed char kFree = -1;
  static constexpr signed char kOut = 0;
  static constexpr signed char kIn = 1;

  struct Group {
    std::vector<int> members;
    int first = 0;
    std::int64_t cost = 0;
    double value = 0.0;
  };

  void Search(std::size_t pos) {
    while (pos < order_.size() && status_[order_[pos]] != kFree) ++pos;
    if (pos == order_.size()) {
      if (value_ > best_value_ + kObjectiveTolerance) {
        best_value_ = value_;
        best_status_ = status_;
      }
      return;
    }
    if (Bound() <= best_value_ + kObjectiveTolerance) return;

    const int g = order_[pos];
    const std::size_t mark = trail_.size();
    if (Exclude(g)) Search(pos + 1);
    Undo(mark);
    if (Include(g)) Search(pos + 1);
    Undo(mark);
  }

  double Bound() {
    items_.clear();
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (status_[g] == kFree && groups_[g].cost <= budget_ - cost_) {
        items_.push_back({groups_[g].value, groups_[g].cost});
      }
    }
    return value_ + FractionalBound(items_, budget_ - cost_);
  }

  bool Include(int g) {
    if (!Set(g, kIn)) return false;
    for (int h : requires_[g]) {
      if (!Set(h, kIn)) return false;
    }
    return cost_ <= budget_;
  }

  bool Exclude(int g) {
    if (!Set(g, kOut)) return false;
    for (int h : required_by_[g]) {
      if (!Set(h, kOut)) return false;
    }
    return true;
  }

  bool Set(int g, signed char s) {
    if (status_[g] == s) return true;
    if (status_[g] != kFree) return false;
    status_[g] = s;
    trail_.push_back(g);
    if (s == kIn) {
      cost_ += groups_[g].cost;
      value_ += groups_[g].value;
    }
    return true;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int g = trail_.back();
      trail_.pop_back();
      if (status_[g] == kIn) {
        cost_ -= groups_[g].cost;
        value_ -= groups_[g].value;
      }
      status_[g] = kFree;
    }
  }

  int n_;
  std::int64_t budget_;
  std::vector<int> group_of_;
  std::vector<Group> groups_;
  std::vector<std::vector<int>> requires_;
  std::vector<std::vector<int>> required_by_;
  std::vector<int> order_;

  std::vector<signed char> status_;
  std::vector<int> trail_;
  std::int64_t cost_ = 0;
  double value_ = 0.0;

  // The empty selection is feasible and lexicographically smallest.
  std::vector<signed char> best_status_;
  double best_value_ = 0.0;

  std::vector<KnapsackItem> items_;
};

Selection SolvePrecedenceKnapsack(const Instance& instance,
                                  std::int64_t budget,
                                  std::optional<double> threshold) {
  const Frig& f = instance.frig();
  const int n = static_cast<int>(f.size());
  std::vector<std::vector<int>> edges(n);
  if (threshold.has_value()) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && f.rho(i, j) > *threshold) edges[i].push_back(j);
      }
    }
  }
  return PrecedenceKnapsack(f.requirements, edges, budget).Solve();
}

// Dynamic-programming table cells above which BKP falls back to search.
constexpr std::int64_t kMaxDpCells = std::int64_t{1} << 27;

// Branch and bound for the overall value. Decisions are made for r_1, r_2,
// ... in order, excluding first, so the first optimum found is the
// lexicographically smallest one.
class GorsSearch {
 public:
  GorsSearch(const Instance& instance, std::int64_t budget)
      : n_(static_cast<int>(instance.size())),
        catalog_(instance.catalog()),
        closure_(instance.closure()),
        budget_(budget),
        impact_(n_ + 1, std::vector<double>(n_, 0.0)),
        chosen_(n_, 0),
        best_(n_, 0),
        effective_(n_, 0.0) {}

  Selection Solve() {
    Search(0, 0);
    Selection s(n_);
    for (int i = 0; i < n_; ++i) s.set(i, best_[i] != 0);
    return s;
  }

 private:
  // impact_[d][k] is the impact on k of the exclusions among the first d
  // decisions; it can only grow as more requirements are excluded.
  void Search(int depth, std::int64_t cost) {
    if (depth == n_) {
      double ov = 0.0;
      for (int i = 0; i < n_; ++i) {
        if (chosen_[i]) ov += catalog_[i].value * (1.0 - impact_[n_][i]);
      }
      if (ov > best_value_ + kObjectiveTolerance) {
        best_value_ = ov;
        best_ = chosen_;
      }
      return;
    }
    if (Bound(depth, cost) <= best_value_ + kObjectiveTolerance) return;

    const std::vector<double>& current = impact_[depth];
    std::vector<double>& next = impact_[depth + 1];

    chosen_[depth] = 0;
    for (int k = 0; k < n_; ++k) {
      next[k] = std::max(current[k], closure_(k, depth));
    }
    Search(depth + 1, cost);

    const std::int64_t with = cost + catalog_[depth].cost;
    if (with <= budget_) {
      chosen_[depth] = 1;
      next = current;
      Search(depth + 1, with);
      chosen_[depth] = 0;
    }
  }

  // Requirements that no longer fit are certainly excluded, so their
  // impacts are charged already.
  double Bound(int depth, std::int64_t cost) {
    const std::int64_t room = budget_ - cost;
    effective_ = impact_[depth];
    for (int j = depth; j < n_; ++j) {
      if (catalog_[j].cost <= room) continue;
      for (int k = 0; k < n_; ++k) {
        effective_[k] = std::max(effective_[k], closure_(k, j));
      }
    }
    double fixed = 0.0;
    for (int i = 0; i < depth; ++i) {
      if (chosen_[i]) fixed += catalog_[i].value * (1.0 - effective_[i]);
    }
    items_.clear();
    for (int k = depth; k < n_; ++k) {
      if (catalog_[k].cost <= room) {
        items_.push_back({catalog_[k].value * (1.0 - effective_[k]),
                          catalog_[k].cost});
      }
    }
    return fixed + FractionalBound(items_, room);
  }

  int n_;
  const Catalog& catalog_;
  const StrengthClosure& closure_;
  std::int64_t budget_;
  std::vector<std::vector<double>> impact_;
  std::vector<char> chosen_;
  std::vector<char> best_;
  double best_value_ = 0.0;
  std::vector<double> effective_;
  std::vector<KnapsackItem> items_;
};

}  // namespace

std::string_view ModelName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kBkp:
      return "BKP";
    case ModelKind::kBkpPc:
      return "BKP-PC";
    case ModelKind::kGors:
      return "GORS";
  }
  return "?";
}

ModelKind ParseModelKind(std::string_view text) {
  std::string lower;
  for (char c : text) {
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (lower == "bkp") return ModelKind::kBkp;
  if (lower == "bkp-pc" || lower == "bkppc" || lower == "bkp_pc") {
    return ModelKind::kBkpPc;
  }
  if (lower == "gors") return ModelKind::kGors;
  throw PreconditionError(
      fmt::format("unknown model '{}' (expected bkp, bkp-pc or gors)", text));
}

Instance::Instance(Frig frig) : frig_(std::move(frig)), closure_(Closure(frig_)) {}

SolveResult SolveBkp(const Instance& instance, std::int64_t budget) {
  CheckBudget(budget);
  const Catalog& catalog = instance.catalog();
  const std::size_t n = catalog.size();
  const std::int64_t cap = std::min(budget, TotalCost(catalog));
  const std::int64_t width = cap + 1;

  if (static_cast<std::int64_t>(n + 1) * width > kMaxDpCells) {
    return MakeResult(instance,
                      SolvePrecedenceKnapsack(instance, budget, std::nullopt),
                      SelectionModel::Bkp(), budget);
  }

  // best[i * width + c]: largest value from requirements i..n-1 within c.
  std::vector<double> best(static_cast<std::size_t>((n + 1) * width), 0.0);
  for (std::size_t i = n; i-- > 0;) {
    const double* next = &best[(i + 1) * width];
    double* row = &best[i * width];
    const std::int64_t c_i = catalog[i].cost;
    for (std::int64_t c = 0; c <= cap; ++c) {
      row[c] = next[c];
      if (c_i <= c) row[c] = std::max(row[c], catalog[i].value + next[c - c_i]);
    }
  }

  // Prefer x_i = 0 whenever that still reaches the optimum.
  Selection s(n);
  std::int64_t c = cap;
  for (std::size_t i = 0; i < n; ++i) {
    const double here = best[i * width + c];
    const double skip = best[(i + 1) * width + c];
    if (skip >= here - kObjectiveTolerance) continue;
    s.set(i);
    c -= catalog[i].cost;
  }
  return MakeResult(instance, std::move(s), SelectionModel::Bkp(), budget);
}

SolveResult SolveBkpPc(const Instance& instance, std::int64_t budget,
                       double threshold) {
  CheckBudget(budget);
  CheckThreshold(threshold);
  return MakeResult(instance,
                    SolvePrecedenceKnapsack(instance, budget, threshold),
                    SelectionModel::BkpPc(threshold), budget);
}

SolveResult SolveGors(const Instance& instance, std::int64_t budget) {
  CheckBudget(budget);
  return MakeResult(instance, GorsSearch(instance, budget).Solve(),
                    SelectionModel::Gors(), budget);
}

SolveResult Solve(const Instance& instance, std::int64_t budget,
                  const SelectionModel& model) {
  switch (model.kind) {
    case ModelKind::kBkp:
      return SolveBkp(instance, budget);
    case ModelKind::kBkpPc:
      return SolveBkpPc(instance, budget, model.threshold);
    case ModelKind::kGors:
      return SolveGors(instance, budget);
  }
  throw PreconditionError("unknown selection model");
}

SolveResult SolveBruteForce(const Instance& instance, std::int64_t budget,
                            const SelectionModel& model) {
  CheckBudget(budget);
  const std::size_t n = instance.size();
  if (n > kBruteForceMaxSize) {
    throw PreconditionError(fmt::format(
        "brute force refuses {} requirements (limit {})", n,
        kBruteForceMaxSize));
  }
  if (model.kind == ModelKind::kBkpPc) CheckThreshold(model.threshold);

  // Codes count upward with x_1 as the most significant bit, i.e. in
  // lexicographic order of the indicator vector.
  Selection best(n);
  double best_value = 0.0;
  Selection s(n);
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << n); ++code) {
    for (std::size_t i = 0; i < n; ++i) s.set(i, (code >> (n - 1 - i)) & 1u);
    const Accumulation acc = Accumulated(instance.catalog(), s);
    if (acc.cost > budget) continue;
    double value = acc.value;
    if (model.kind == ModelKind::kBkpPc &&
        !SatisfiesPrecedence(instance.frig(), s, model.threshold)) {
      continue;
    }
    if (model.kind == ModelKind::kGors) {
      value = OverallValue(instance.catalog(), instance.closure(), s);
    }
    if (value > best_value + kObjectiveTolerance) {
      best_value = value;
      best = s;
    }
  }
  return MakeResult(instance, std::move(best), model, budget);
}

bool SatisfiesPrecedence(const Frig& frig, const Selection& selection,
                         double threshold) {
  const std::size_t n = frig.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!selection.contains(i)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !selection.contains(j) && frig.rho(i, j) > threshold) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace gors
