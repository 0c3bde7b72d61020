// Copyright 2026 The PDPSD Authors
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

#include "pdpsd/planning/route_model.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "pdpsd/core/cost.h"
#include "pdpsd/core/errors.h"

namespace pdpsd {

using milp::RowSense;
using milp::Term;
using milp::VarType;

RouteLayout::RouteLayout(int customers, int trucks, int scenarios)
    : n_(customers), trucks_(trucks), scenarios_(scenarios) {
  w_base_ = trucks_;
  y_base_ = w_base_ + n_ * trucks_;
  v_base_ = y_base_ + n_;
  s_base_ = v_base_ + scenarios_ * trucks_ * (n_ + 1) * (n_ + 1);
  q_base_ = s_base_ + scenarios_ * trucks_ * n_;
}

namespace {

void CheckInput(const Instance& instance, const RouteModelInput& input) {
  if (input.trucks.empty()) throw InputError("route model needs a truck");
  if (input.scenarios.empty()) throw InputError("route model needs a scenario");
  if (input.sizes.size() != input.scenarios.size()) {
    throw InputError("size table does not match the scenario count");
  }
  for (const auto& row : input.sizes) {
    if (row.size() != input.customers.size()) {
      throw InputError("size table does not match the customer count");
    }
  }
  std::set<int> ids;
  for (int c : input.customers) {
    if (c <= 0) throw InputError("customer ids must be positive");
    if (!ids.insert(c).second) {
      throw InputError("customer " + std::to_string(c) + " listed twice");
    }
    if (!instance.distances.Knows(c)) {
      throw InputError("customer " + std::to_string(c) + " has no location");
    }
  }
  std::set<int> origins;
  std::set<int> truck_ids;
  for (const ModelTruck& t : input.trucks) {
    truck_ids.insert(t.truck_id);
    if (t.origin == kDepot) continue;
    if (ids.count(t.origin) == 0) {
      throw InputError("origin " + std::to_string(t.origin) +
                       " is not a model customer");
    }
    if (!origins.insert(t.origin).second) {
      throw InputError("two trucks share origin " + std::to_string(t.origin));
    }
  }
  for (const auto& [a, b] : input.dependencies) {
    if (ids.count(a) == 0 || ids.count(b) == 0) {
      throw InputError("dependency (" + std::to_string(a) + "," +
                       std::to_string(b) + ") leaves the model");
    }
  }
  for (const auto& [c, t] : input.forced_truck) {
    if (ids.count(c) == 0 || truck_ids.count(t) == 0) {
      throw InputError("forced assignment of " + std::to_string(c) +
                       " references unknown ids");
    }
  }
  for (const auto& [c, t] : input.forbidden_truck) {
    if (ids.count(c) == 0 || truck_ids.count(t) == 0) {
      throw InputError("forbidden assignment of " + std::to_string(c) +
                       " references unknown ids");
    }
  }
  for (int c : input.forced_outsourced) {
    if (ids.count(c) == 0) {
      throw InputError("forced outsourcing of unknown customer " +
                       std::to_string(c));
    }
  }
}

// Longest dependency chain ending at each customer (0 for sources).
std::map<int, int> DependencyDepth(const RouteModelInput& input) {
  std::map<int, std::vector<int>> preds;
  for (const auto& [a, b] : input.dependencies) preds[b].push_back(a);
  std::map<int, int> depth;
  std::function<int(int)> visit = [&](int c) -> int {
    auto it = depth.find(c);
    if (it != depth.end()) return it->second;
    depth[c] = 0;  // guards cycles; inputs are validated acyclic
    int d = 0;
    for (int p : preds[c]) d = std::max(d, visit(p) + 1);
    depth[c] = d;
    return d;
  };
  for (int c : input.customers) visit(c);
  return depth;
}

}  // namespace

RouteModel BuildRouteModel(const Instance& instance, RouteModelInput input) {
  CheckInput(instance, input);
  RouteModel model;
  model.input = std::move(input);
  const RouteModelInput& in = model.input;
  const int n = static_cast<int>(in.customers.size());
  const int num_trucks = static_cast<int>(in.trucks.size());
  const int num_scenarios = static_cast<int>(in.scenarios.size());
  for (int s = 1; s <= n; ++s) model.slot_of[in.customers[s - 1]] = s;
  model.layout = RouteLayout(n, num_trucks, num_scenarios);
  const RouteLayout& L = model.layout;
  milp::MilpProblem& p = model.problem;
  p.objective_offset = in.constant;

  auto loc = [&](int slot) { return model.LocationOfSlot(slot); };
  auto tag = [&](int slot) {
    return slot == 0 ? std::string("D") : "c" + std::to_string(loc(slot));
  };
  auto ttag = [&](int t) { return "t" + std::to_string(in.trucks[t].truck_id); };
  auto wtag = [&](int w) { return "w" + std::to_string(w + 1); };

  std::vector<int> origin_slot(num_trucks, 0);
  std::vector<int> truck_of_origin(n + 1, -1);
  for (int t = 0; t < num_trucks; ++t) {
    if (in.trucks[t].origin != kDepot) {
      origin_slot[t] = model.slot_of.at(in.trucks[t].origin);
      truck_of_origin[origin_slot[t]] = t;
    }
  }

  // Variables, in layout order.
  for (int t = 0; t < num_trucks; ++t) {
    p.AddBinary("U_" + ttag(t), in.trucks[t].initial_cost);
  }
  for (int s = 1; s <= n; ++s) {
    for (int t = 0; t < num_trucks; ++t) p.AddBinary("W_" + tag(s) + "_" + ttag(t));
  }
  for (int s = 1; s <= n; ++s) {
    p.AddBinary("Y_" + tag(s), in.outsource_penalty);
  }
  for (int w = 0; w < num_scenarios; ++w) {
    for (int t = 0; t < num_trucks; ++t) {
      for (int u = 0; u <= n; ++u) {
        for (int v = 0; v <= n; ++v) {
          const double cost =
              u == v ? 0.0
                     : in.scenarios[w].probability *
                           ArcCost(instance, loc(u), loc(v));
          const int var = p.AddBinary(
              "V_" + wtag(w) + "_" + ttag(t) + "_" + tag(u) + "_" + tag(v), cost);
          if (u == v) p.upper[var] = 0.0;
        }
      }
    }
  }
  for (int w = 0; w < num_scenarios; ++w) {
    for (int t = 0; t < num_trucks; ++t) {
      for (int s = 1; s <= n; ++s) {
        p.AddVariable("S_" + wtag(w) + "_" + ttag(t) + "_" + tag(s), 0.0, n,
                      VarType::kContinuous);
      }
    }
  }
  for (int w = 0; w < num_scenarios; ++w) {
    for (int t = 0; t < num_trucks; ++t) {
      for (int s = 1; s <= n; ++s) {
        p.AddVariable("Q_" + wtag(w) + "_" + ttag(t) + "_" + tag(s), 0.0,
                      in.trucks[t].capacity, VarType::kContinuous);
      }
    }
  }

  // Fixings. A fixing that contradicts an earlier one turns into an
  // unsatisfiable empty row, so the problem stays well formed.
  auto fix = [&](int var, double lo, double hi, const std::string& why) {
    const double new_lo = std::max(p.lower[var], lo);
    const double new_hi = std::min(p.upper[var], hi);
    if (new_lo > new_hi) {
      p.AddRow({}, RowSense::kGreaterEqual, 1.0, "conflict_" + why);
      return;
    }
    p.lower[var] = new_lo;
    p.upper[var] = new_hi;
  };
  for (int t = 0; t < num_trucks; ++t) {
    const ModelTruck& truck = in.trucks[t];
    if (truck.fixed_used.has_value()) {
      const double u = *truck.fixed_used ? 1.0 : 0.0;
      fix(L.U(t), u, u, "usage_" + ttag(t));
    }
    const int o = origin_slot[t];
    if (o == 0) continue;
    fix(L.W(o, t), 1.0, 1.0, "origin_" + tag(o));
    fix(L.Y(o), 0.0, 0.0, "origin_" + tag(o));
    for (int other = 0; other < num_trucks; ++other) {
      if (other != t) fix(L.W(o, other), 0.0, 0.0, "origin_" + tag(o));
    }
    for (int w = 0; w < num_scenarios; ++w) {
      fix(L.Q(w, t, o), truck.origin_load, truck.origin_load,
          "origin_load_" + tag(o));
      for (int v = 0; v <= n; ++v) fix(L.V(w, t, 0, v), 0.0, 0.0, "depot");
      for (int tt = 0; tt < num_trucks; ++tt) {
        for (int u = 0; u <= n; ++u) fix(L.V(w, tt, u, o), 0.0, 0.0, "into_origin");
      }
    }
  }
  for (const auto& [c, truck_id] : in.forced_truck) {
    const int s = model.slot_of.at(c);
    for (int t = 0; t < num_trucks; ++t) {
      if (in.trucks[t].truck_id == truck_id) {
        fix(L.W(s, t), 1.0, 1.0, "forced_" + tag(s));
      }
    }
    fix(L.Y(s), 0.0, 0.0, "forced_" + tag(s));
  }
  for (int c : in.forced_outsourced) {
    const int s = model.slot_of.at(c);
    fix(L.Y(s), 1.0, 1.0, "outsourced_" + tag(s));
  }
  for (const auto& [c, truck_id] : in.forbidden_truck) {
    const int s = model.slot_of.at(c);
    for (int t = 0; t < num_trucks; ++t) {
      if (in.trucks[t].truck_id == truck_id) {
        fix(L.W(s, t), 0.0, 0.0, "forbidden_" + tag(s));
      }
    }
  }

  auto arc_open = [&](int w, int t, int u, int v) {
    return p.upper[L.V(w, t, u, v)] > 0.0;
  };

  // Truck usage and allocation.
  if (n > 0) {
    for (int t = 0; t < num_trucks; ++t) {
      std::vector<Term> row;
      for (int s = 1; s <= n; ++s) row.push_back({L.W(s, t), 1.0});
      row.push_back({L.U(t), -static_cast<double>(n)});
      p.AddRow(row, RowSense::kLessEqual, 0.0, "usage_" + ttag(t));
      for (int s = 1; s <= n; ++s) {
        if (p.upper[L.W(s, t)] <= 0.0) continue;
        p.AddRow({{L.W(s, t), 1.0}, {L.U(t), -1.0}}, RowSense::kLessEqual,
                 0.0, "usage_" + ttag(t) + "_" + tag(s));
      }
    }
  }
  for (int s = 1; s <= n; ++s) {
    std::vector<Term> row;
    for (int t = 0; t < num_trucks; ++t) row.push_back({L.W(s, t), 1.0});
    row.push_back({L.Y(s), 1.0});
    p.AddRow(row, RowSense::kEqual, 1.0, "allocate_" + tag(s));
  }

  double max_abs_size = 0.0;
  for (const auto& row : in.sizes) {
    for (double a : row) max_abs_size = std::max(max_abs_size, std::fabs(a));
  }

  for (int w = 0; w < num_scenarios; ++w) {
    const auto& a = in.sizes[w];
    auto size_of = [&](int slot) { return a[slot - 1]; };
    for (int t = 0; t < num_trucks; ++t) {
      const std::string wt = wtag(w) + "_" + ttag(t);
      const int o = origin_slot[t];
      const double cap = in.trucks[t].capacity;
      const double big = cap + max_abs_size;

      // Flow conservation.
      for (int i = 1; i <= n; ++i) {
        std::vector<Term> out;
        for (int v = 0; v <= n; ++v) {
          if (v != i) out.push_back({L.V(w, t, i, v), 1.0});
        }
        out.push_back({L.W(i, t), -1.0});
        p.AddRow(out, RowSense::kEqual, 0.0, "out_" + wt + "_" + tag(i));
        if (truck_of_origin[i] >= 0) continue;
        std::vector<Term> into;
        for (int u = 0; u <= n; ++u) {
          if (u != i) into.push_back({L.V(w, t, u, i), 1.0});
        }
        into.push_back({L.W(i, t), -1.0});
        p.AddRow(into, RowSense::kEqual, 0.0, "in_" + wt + "_" + tag(i));
      }

      if (o == 0) {
        if (n > 0) {
          std::vector<Term> leave, leave_once;
          for (int i = 1; i <= n; ++i) {
            leave.push_back({L.V(w, t, 0, i), static_cast<double>(n)});
            leave.push_back({L.W(i, t), -1.0});
            leave_once.push_back({L.V(w, t, 0, i), 1.0});
          }
          p.AddRow(leave, RowSense::kGreaterEqual, 0.0, "depart_" + wt);
          p.AddRow(leave_once, RowSense::kLessEqual, 1.0, "depart_once_" + wt);
          // Per-customer form of the departure row.
          for (int k = 1; k <= n; ++k) {
            if (p.upper[L.W(k, t)] <= 0.0) continue;
            std::vector<Term> row = leave_once;
            row.push_back({L.W(k, t), -1.0});
            p.AddRow(row, RowSense::kGreaterEqual, 0.0,
                     "depart_" + wt + "_" + tag(k));
          }
        }
        std::vector<Term> preload;
        for (int k = 1; k <= n; ++k) {
          if (size_of(k) < 0.0) preload.push_back({L.W(k, t), -size_of(k)});
        }
        if (!preload.empty()) {
          p.AddRow(preload, RowSense::kLessEqual, cap, "preload_" + wt);
        }
        for (int j = 1; j <= n; ++j) {
          if (!arc_open(w, t, 0, j)) continue;
          std::vector<Term> fwd = preload;
          fwd.push_back({L.Q(w, t, j), -1.0});
          fwd.push_back({L.V(w, t, 0, j), big});
          p.AddRow(fwd, RowSense::kLessEqual, big - size_of(j),
                   "load_" + wt + "_D_" + tag(j));
          std::vector<Term> rev;
          for (const Term& term : preload) rev.push_back({term.var, -term.coef});
          rev.push_back({L.Q(w, t, j), 1.0});
          rev.push_back({L.V(w, t, 0, j), big});
          p.AddRow(rev, RowSense::kLessEqual, big + size_of(j),
                   "load_rev_" + wt + "_D_" + tag(j));
        }
      } else {
        std::vector<Term> leave, back;
        for (int v = 0; v <= n; ++v) {
          if (v != o) leave.push_back({L.V(w, t, o, v), 1.0});
        }
        for (int i = 1; i <= n; ++i) back.push_back({L.V(w, t, i, 0), 1.0});
        p.AddRow(leave, RowSense::kEqual, 1.0, "depart_origin_" + wt);
        p.AddRow(back, RowSense::kEqual, 1.0, "return_" + wt);
      }

      // Deliveries with a predecessor are all still on board when the first
      // of those predecessors is visited.
      if (o == 0) {
        std::set<int> waiting;  // slots of deliveries with a predecessor
        std::set<int> before;   // slots of their predecessors
        for (const auto& [ci, cj] : in.dependencies) {
          const int i = model.slot_of.at(ci);
          const int j = model.slot_of.at(cj);
          if (size_of(j) < 0.0) {
            waiting.insert(j);
            before.insert(i);
          }
        }
        // The first predecessor visited adds at least this much.
        double least = milp::kInfinity;
        for (int x : before) least = std::min(least, std::max(0.0, size_of(x)));
        for (int x : before) {
          std::map<int, double> coef;
          coef[L.W(x, t)] += least;
          for (int d : waiting) coef[L.W(d, t)] -= size_of(d);
          std::vector<Term> row;
          for (const auto& [var, c] : coef) {
            if (c != 0.0) row.push_back({var, c});
          }
          p.AddRow(row, RowSense::kLessEqual, cap,
                   "first_pred_" + wt + "_" + tag(x));
        }
      }

      // Load on the final leg back to the depot: start load plus every
      // assigned size. Implied by the load chain but visible to the LP.
      {
        std::vector<Term> end;
        double start = 0.0;
        for (int k = 1; k <= n; ++k) {
          if (k == o) continue;
          if (o == 0 && size_of(k) <= 0.0) continue;  // preload cancels
          if (size_of(k) != 0.0) end.push_back({L.W(k, t), size_of(k)});
        }
        if (o != 0) start = in.trucks[t].origin_load;
        if (!end.empty()) {
          p.AddRow(end, RowSense::kLessEqual, cap - start, "end_load_" + wt);
          if (o != 0) {
            p.AddRow(end, RowSense::kGreaterEqual, -start,
                     "end_load_min_" + wt);
          }
        }
      }

      // Subtour elimination and visit order.
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j || !arc_open(w, t, i, j)) continue;
          p.AddRow({{L.S(w, t, i), 1.0},
                    {L.S(w, t, j), -1.0},
                    {L.V(w, t, i, j), static_cast<double>(n)}},
                   RowSense::kLessEqual, n - 1.0,
                   "mtz_" + wt + "_" + tag(i) + "_" + tag(j));
        }
        p.AddRow({{L.S(w, t, i), 1.0}, {L.W(i, t), -1.0}},
                 RowSense::kGreaterEqual, 0.0, "order_" + wt + "_" + tag(i));
      }
      // No two-customer cycles.
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (!arc_open(w, t, i, j) || !arc_open(w, t, j, i)) continue;
          p.AddRow({{L.V(w, t, i, j), 1.0},
                    {L.V(w, t, j, i), 1.0},
                    {L.W(i, t), -1.0}},
                   RowSense::kLessEqual, 0.0,
                   "pair_" + wt + "_" + tag(i) + "_" + tag(j));
        }
      }
      for (const auto& [ci, cj] : in.dependencies) {
        const int i = model.slot_of.at(ci);
        const int j = model.slot_of.at(cj);
        p.AddRow({{L.S(w, t, i), 1.0}, {L.S(w, t, j), -1.0}},
                 RowSense::kLessEqual, -1.0,
                 "precede_" + wt + "_" + tag(i) + "_" + tag(j));
      }

      // Onboard load along used arcs, both directions so Q is the exact
      // running load.
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j || !arc_open(w, t, i, j)) continue;
          const std::string arc = wt + "_" + tag(i) + "_" + tag(j);
          p.AddRow({{L.Q(w, t, i), 1.0},
                    {L.Q(w, t, j), -1.0},
                    {L.V(w, t, i, j), big}},
                   RowSense::kLessEqual, big - size_of(j), "load_" + arc);
          p.AddRow({{L.Q(w, t, i), -1.0},
                    {L.Q(w, t, j), 1.0},
                    {L.V(w, t, i, j), big}},
                   RowSense::kLessEqual, big + size_of(j), "load_rev_" + arc);
        }
      }
    }
  }

  // Dependent customers share their fate.
  for (const auto& [ci, cj] : in.dependencies) {
    const int i = model.slot_of.at(ci);
    const int j = model.slot_of.at(cj);
    const std::string pair = tag(i) + "_" + tag(j);
    p.AddRow({{L.Y(i), 1.0}, {L.Y(j), -1.0}}, RowSense::kLessEqual, 0.0,
             "same_y_" + pair);
    p.AddRow({{L.Y(j), 1.0}, {L.Y(i), -1.0}}, RowSense::kLessEqual, 0.0,
             "same_y_rev_" + pair);
    for (int t = 0; t < num_trucks; ++t) {
      p.AddRow({{L.W(i, t), 1.0}, {L.W(j, t), -1.0}}, RowSense::kLessEqual, 0.0,
               "same_w_" + pair + "_" + ttag(t));
      p.AddRow({{L.W(j, t), 1.0}, {L.W(i, t), -1.0}}, RowSense::kLessEqual, 0.0,
               "same_w_rev_" + pair + "_" + ttag(t));
    }
  }
  return model;
}

std::vector<double> EncodeRoutes(const RouteModel& model,
                                 const RouteChoice& choice) {
  const RouteModelInput& in = model.input;
  const RouteLayout& L = model.layout;
  const int n = L.customers();
  const int num_trucks = L.trucks();
  if (static_cast<int>(choice.routes.size()) != L.scenarios()) {
    throw InputError("route choice needs one route set per scenario");
  }
  std::vector<double> x(L.num_vars(), 0.0);
  for (int t = 0; t < num_trucks; ++t) {
    auto it = choice.truck_used.find(in.trucks[t].truck_id);
    x[L.U(t)] = it != choice.truck_used.end() && it->second ? 1.0 : 0.0;
  }
  for (int c : choice.outsourced) x[L.Y(model.SlotOf(c))] = 1.0;
  const auto depth = DependencyDepth(in);

  for (int w = 0; w < L.scenarios(); ++w) {
    if (static_cast<int>(choice.routes[w].size()) != num_trucks) {
      throw InputError("route choice needs one route per truck");
    }
    for (int t = 0; t < num_trucks; ++t) {
      const auto& stops = choice.routes[w][t];
      for (int s = 1; s <= n; ++s) {
        x[L.S(w, t, s)] = 1.0 + depth.at(model.LocationOfSlot(s));
      }
      if (stops.empty()) continue;
      const ModelTruck& truck = in.trucks[t];
      double load = truck.origin_load;
      if (truck.origin == kDepot) {
        load = 0.0;
        for (size_t k = 1; k + 1 < stops.size(); ++k) {
          const double a = in.sizes[w][model.SlotOf(stops[k]) - 1];
          if (a < 0.0) load -= a;
        }
      }
      int position = 1;
      if (truck.origin != kDepot) {
        const int o = model.SlotOf(truck.origin);
        x[L.S(w, t, o)] = position++;
        x[L.Q(w, t, o)] = load;
        if (w == 0) x[L.W(o, t)] = 1.0;
      }
      for (size_t k = 0; k + 1 < stops.size(); ++k) {
        const int u = model.SlotOf(stops[k]);
        const int v = model.SlotOf(stops[k + 1]);
        x[L.V(w, t, u, v)] = 1.0;
        if (v == 0) continue;
        load += in.sizes[w][v - 1];
        x[L.S(w, t, v)] = position++;
        x[L.Q(w, t, v)] = load;
        if (w == 0) x[L.W(v, t)] = 1.0;
      }
    }
  }
  return x;
}

std::vector<LocationId> DecodeWalk(
    const std::vector<std::pair<int, int>>& arcs, LocationId origin) {
  if (arcs.empty()) return {};
  std::map<int, int> successor;
  for (const auto& [u, v] : arcs) {
    if (!successor.emplace(u, v).second) {
      throw DecodeError("location " + std::to_string(u) +
                        " has more than one successor");
    }
  }
  std::vector<LocationId> stops = {origin};
  std::set<int> visited = {origin};
  int current = origin;
  while (true) {
    auto it = successor.find(current);
    if (it == successor.end()) {
      throw DecodeError("walk from " + std::to_string(origin) + " stops at " +
                        std::to_string(current) + " before the depot");
    }
    const int next = it->second;
    successor.erase(it);
    stops.push_back(next);
    if (next == kDepot) break;
    if (!visited.insert(next).second) {
      throw DecodeError("walk from " + std::to_string(origin) +
                        " revisits " + std::to_string(next));
    }
    current = next;
  }
  if (!successor.empty()) {
    std::set<int> nodes;
    for (const auto& [u, v] : successor) nodes.insert(u);
    std::string list;
    for (int node : nodes) {
      if (!list.empty()) list += ",";
      list += std::to_string(node);
    }
    throw DecodeError("subtour {" + list + "}");
  }
  return stops;
}

RouteSolution DecodeRouteSolution(const RouteModel& model,
                                  const std::vector<double>& x) {
  const RouteLayout& L = model.layout;
  const RouteModelInput& in = model.input;
  if (static_cast<int>(x.size()) != L.num_vars()) {
    throw DecodeError("assignment has " + std::to_string(x.size()) +
                      " entries, layout expects " +
                      std::to_string(L.num_vars()));
  }
  const int n = L.customers();
  RouteSolution out;
  for (int t = 0; t < L.trucks(); ++t) {
    out.choice.truck_used[in.trucks[t].truck_id] = x[L.U(t)] > 0.5;
  }
  for (int s = 1; s <= n; ++s) {
    const int c = model.LocationOfSlot(s);
    if (x[L.Y(s)] > 0.5) out.choice.outsourced.push_back(c);
    for (int t = 0; t < L.trucks(); ++t) {
      if (x[L.W(s, t)] > 0.5) out.assignment[c] = in.trucks[t].truck_id;
    }
  }
  std::sort(out.choice.outsourced.begin(), out.choice.outsourced.end());

  out.choice.routes.assign(L.scenarios(), {});
  out.loads.assign(L.scenarios(), {});
  out.orders.assign(L.scenarios(), {});
  for (int w = 0; w < L.scenarios(); ++w) {
    for (int t = 0; t < L.trucks(); ++t) {
      std::vector<std::pair<int, int>> arcs;
      for (int u = 0; u <= n; ++u) {
        for (int v = 0; v <= n; ++v) {
          if (u != v && x[L.V(w, t, u, v)] > 0.5) {
            arcs.emplace_back(model.LocationOfSlot(u), model.LocationOfSlot(v));
          }
        }
      }
      std::vector<LocationId> stops;
      try {
        stops = DecodeWalk(arcs, in.trucks[t].origin);
      } catch (const DecodeError& e) {
        throw DecodeError("truck " + std::to_string(in.trucks[t].truck_id) +
                          " scenario " + in.scenarios[w].id + ": " + e.what());
      }
      std::map<int, double> loads, orders;
      for (LocationId stop : stops) {
        if (stop == kDepot) continue;
        const int s = model.SlotOf(stop);
        loads[stop] = x[L.Q(w, t, s)];
        orders[stop] = x[L.S(w, t, s)];
      }
      out.choice.routes[w].push_back(std::move(stops));
      out.loads[w].push_back(std::move(loads));
      out.orders[w].push_back(std::move(orders));
    }
  }
  return out;
}

}  // namespace pdpsd
