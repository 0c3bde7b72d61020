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

#include "pdpsd/planning/reroute.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdpsd/core/cost.h"
#include "pdpsd/core/errors.h"
#include "pdpsd/planning/offline.h"

namespace pdpsd {
namespace {

constexpr double kLoadTol = 1e-6;
constexpr double kClockTol = 1e-9;

std::string Str(int v) { return std::to_string(v); }

int RealizedIndex(const Instance& instance, const std::string& id) {
  const int w = instance.scenarios.IndexOf(id);
  if (w < 0) throw InputError("unknown realized scenario " + id);
  return w;
}

bool NeedsDepotLoading(const Instance& instance, int customer,
                       const std::vector<std::vector<double>>& sizes,
                       int slot) {
  for (const auto& [a, b] : instance.dependencies.pairs) {
    if (b == customer) return false;
  }
  for (const auto& row : sizes) {
    if (row[slot] < 0.0) return true;
  }
  return false;
}

std::vector<LocationId> TailRoute(const TruckState& t) {
  if (t.origin == kDepot && t.remaining.empty()) return {};
  std::vector<LocationId> route{t.origin};
  route.insert(route.end(), t.remaining.begin(), t.remaining.end());
  route.push_back(kDepot);
  return route;
}

}  // namespace

ReplanTrigger ReplanTrigger::KthFromRouteEnd(int k) {
  ReplanTrigger t;
  t.kind = Kind::kKthFromRouteEnd;
  t.k = k;
  return t;
}

ReplanTrigger ReplanTrigger::AtEpochList(std::vector<int> stops) {
  ReplanTrigger t;
  t.kind = Kind::kAtEpochList;
  t.stops = std::move(stops);
  return t;
}

const TruckState* SimulationState::FindTruck(int truck_id) const {
  for (const TruckState& t : trucks) {
    if (t.truck_id == truck_id) return &t;
  }
  return nullptr;
}

SimulationState InitialState(const Instance& instance,
                             const std::string& realized_scenario) {
  RealizedIndex(instance, realized_scenario);
  SimulationState state;
  state.realized_scenario = realized_scenario;
  for (const Truck& truck : instance.trucks) {
    TruckState t;
    t.truck_id = truck.id;
    t.walk = {kDepot};
    state.trucks.push_back(std::move(t));
  }
  return state;
}

void AdoptPlan(const Instance& instance, const Plan& plan,
               SimulationState& state) {
  const int wi = RealizedIndex(instance, state.realized_scenario);
  const auto found = std::find(plan.scenario_ids.begin(), plan.scenario_ids.end(),
                               state.realized_scenario);
  if (found == plan.scenario_ids.end()) {
    throw StateError("plan has no route for scenario " + state.realized_scenario);
  }
  const auto w = static_cast<std::size_t>(found - plan.scenario_ids.begin());
  state.pending.clear();
  for (TruckState& t : state.trucks) {
    const int ti = plan.TruckIndex(t.truck_id);
    if (ti < 0) throw StateError("plan has no truck " + Str(t.truck_id));
    const auto& route = plan.routes[w][ti];
    t.remaining.clear();
    if (route.empty()) {
      if (t.origin != kDepot) {
        throw StateError("truck " + Str(t.truck_id) + " has no route from " +
                         Str(t.origin));
      }
    } else {
      if (route.front() != t.origin || route.back() != kDepot) {
        throw StateError("route of truck " + Str(t.truck_id) +
                         " does not run from its origin to the depot");
      }
      t.remaining.assign(route.begin() + 1, route.end() - 1);
    }
    auto used = plan.truck_used.find(t.truck_id);
    t.used = used != plan.truck_used.end() && used->second;
    if (t.origin == kDepot) {
      t.onboard.clear();
      t.load = 0.0;
      for (int c : t.remaining) {
        const double size = instance.Size(c, wi);
        if (size < 0.0) {
          t.onboard.insert(c);
          t.load -= size;
        }
      }
    }
    state.pending.insert(t.remaining.begin(), t.remaining.end());
  }
  state.outsourced.insert(plan.outsourced.begin(), plan.outsourced.end());
}

SimulationState ObserveState(const Instance& instance,
                             const SimulationState& state,
                             const std::vector<int>& executed) {
  if (executed.size() != state.trucks.size()) {
    throw StateError("executed counts for " + Str(static_cast<int>(executed.size())) +
                     " trucks, state has " +
                     Str(static_cast<int>(state.trucks.size())));
  }
  const int wi = RealizedIndex(instance, state.realized_scenario);
  SimulationState next = state;
  for (std::size_t i = 0; i < next.trucks.size(); ++i) {
    TruckState& t = next.trucks[i];
    const int e = executed[i];
    if (e < 0 || e > static_cast<int>(t.remaining.size())) {
      throw StateError("truck " + Str(t.truck_id) + " cannot execute " + Str(e) +
                       " stops of a " + Str(static_cast<int>(t.remaining.size())) +
                       "-stop route");
    }
    if (e == 0) continue;
    const double capacity = instance.FindTruck(t.truck_id)->capacity;
    if (t.origin == kDepot) {
      t.trip_loads.push_back(t.load);
    } else {
      next.served.insert(t.origin);
    }
    for (int j = 0; j < e; ++j) {
      const int c = t.remaining[j];
      t.load += instance.Size(c, wi);
      if (t.load < -kLoadTol || t.load > capacity + kLoadTol) {
        throw StateError("truck " + Str(t.truck_id) + " load " +
                         std::to_string(t.load) + " after customer " + Str(c) +
                         " leaves [0, " + std::to_string(capacity) + "]");
      }
      if (j + 1 < e) next.served.insert(c);
      next.served_by[c] = t.truck_id;
      next.pending.erase(c);
      t.onboard.erase(c);
      t.walk.push_back(c);
    }
    t.origin = t.remaining[e - 1];
    t.remaining.erase(t.remaining.begin(), t.remaining.begin() + e);
  }
  return next;
}

SimulationState ObserveState(const Instance& instance,
                             const SimulationState& state, const Plan& plan,
                             const std::vector<int>& executed) {
  SimulationState adopted = state;
  AdoptPlan(instance, plan, adopted);
  return ObserveState(instance, adopted, executed);
}

SimulationState ReturnToDepot(const Instance& instance,
                              const SimulationState& state) {
  (void)instance;
  SimulationState next = state;
  for (TruckState& t : next.trucks) {
    if (!t.remaining.empty()) {
      throw StateError("truck " + Str(t.truck_id) +
                       " still has stops before returning");
    }
    if (t.origin == kDepot) continue;
    next.served.insert(t.origin);
    t.origin = kDepot;
    t.walk.push_back(kDepot);
    t.load = 0.0;
    t.onboard.clear();
  }
  return next;
}

RerouteSetup PrepareReroute(const Instance& instance,
                            const SimulationState& state,
                            const std::vector<int>& fresh_customers,
                            const std::vector<std::pair<int, int>>&
                                fresh_dependencies) {
  const int wr = RealizedIndex(instance, state.realized_scenario);
  RerouteSetup setup;
  RouteModelInput& in = setup.input;
  const std::set<int> fresh(fresh_customers.begin(), fresh_customers.end());
  const std::set<std::pair<int, int>> fresh_pairs(fresh_dependencies.begin(),
                                                  fresh_dependencies.end());
  std::set<int> origins;
  std::set<int> members = state.pending;
  for (const TruckState& t : state.trucks) {
    if (t.origin != kDepot) {
      origins.insert(t.origin);
      members.insert(t.origin);
    }
  }
  for (int c : fresh) {
    if (state.served_by.count(c) > 0 || state.outsourced.count(c) > 0) {
      throw InputError("customer " + Str(c) + " was already handled");
    }
    members.insert(c);
  }
  in.customers.assign(members.begin(), members.end());

  double committed = 0.0;
  for (const TruckState& t : state.trucks) {
    const Truck* truck = instance.FindTruck(t.truck_id);
    in.trucks.push_back({t.truck_id, truck->capacity, truck->initial_cost,
                         t.origin, t.origin == kDepot ? 0.0 : t.load, t.used});
    committed += instance.cost.RoutingCost(WalkDistance(instance, t.walk));
  }
  for (int w = 0; w < instance.scenarios.size(); ++w) {
    const Scenario& s = instance.scenarios.scenarios[w];
    in.scenarios.push_back({s.id, s.probability});
    std::vector<double> sizes;
    for (int c : in.customers) {
      sizes.push_back(instance.Size(c, fresh.count(c) > 0 ? w : wr));
    }
    in.sizes.push_back(std::move(sizes));
  }

  auto gone = [&](int c) { return state.served.count(c) > 0; };
  auto inside = [&](int c) { return members.count(c) > 0; };
  auto out = [&](int c) { return state.outsourced.count(c) > 0; };
  auto fail = [](int a, int b, const std::string& why) {
    throw ModelInfeasibleError("dependency (" + Str(a) + "," + Str(b) + "): " +
                               why);
  };
  std::set<int> forced_out;
  for (const auto& [a, b] : instance.dependencies.pairs) {
    if (inside(a) && inside(b)) {
      if (origins.count(b) > 0) fail(a, b, Str(b) + " was already visited");
      in.dependencies.emplace_back(a, b);
    } else if (out(a) || out(b)) {
      const int other = out(a) ? b : a;
      if (out(other)) continue;
      if (inside(other) && origins.count(other) == 0) {
        forced_out.insert(other);
      } else if (inside(other) || gone(other)) {
        fail(a, b, Str(other) + " was served but its partner is outsourced");
      }
    } else if (gone(a) && inside(b)) {
      if (fresh_pairs.count({a, b}) > 0) {
        fail(a, b, Str(a) + " was already served");
      }
      in.forced_truck[b] = state.served_by.at(a);
    } else if (gone(b) && inside(a)) {
      fail(a, b, Str(b) + " was already served");
    }
  }
  in.forced_outsourced.assign(forced_out.begin(), forced_out.end());

  // Depot-loaded packages stay with the truck carrying them and cannot join
  // a truck that already left.
  for (std::size_t slot = 0; slot < in.customers.size(); ++slot) {
    const int c = in.customers[slot];
    if (origins.count(c) > 0) continue;
    if (!NeedsDepotLoading(instance, c, in.sizes, static_cast<int>(slot))) continue;
    for (const TruckState& t : state.trucks) {
      if (t.origin == kDepot) continue;
      if (t.onboard.count(c) > 0) {
        in.forced_truck[c] = t.truck_id;
      } else if (t.origin != kDepot) {
        in.forbidden_truck.insert({c, t.truck_id});
      }
    }
  }
  in.outsource_penalty = instance.cost.outsource_penalty;
  in.constant = committed + instance.cost.outsource_penalty *
                                static_cast<double>(state.outsourced.size());
  setup.committed_routing = committed;

  RouteChoice& cont = setup.continuation;
  std::vector<std::vector<LocationId>> tails;
  std::set<int> routed;
  for (const TruckState& t : state.trucks) {
    cont.truck_used[t.truck_id] = t.used;
    tails.push_back(TailRoute(t));
    routed.insert(tails.back().begin(), tails.back().end());
  }
  cont.routes.assign(in.scenarios.size(), tails);
  for (int c : in.customers) {
    if (routed.count(c) == 0) cont.outsourced.push_back(c);
  }
  return setup;
}

milp::MilpProblem BuildRerouteMilp(const Instance& instance,
                                   const SimulationState& state,
                                   const std::vector<int>& fresh_customers,
                                   const std::vector<std::pair<int, int>>&
                                       fresh_dependencies) {
  RerouteSetup setup =
      PrepareReroute(instance, state, fresh_customers, fresh_dependencies);
  return BuildRouteModel(instance, std::move(setup.input)).problem;
}

StitchedRoute StitchActualRoute(const Instance& instance,
                                const std::vector<PlanSegment>& segments,
                                double initial_cost, int outsourced_count) {
  StitchedRoute out;
  out.route = {kDepot};
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const PlanSegment& seg = segments[i];
    if (seg.route.empty()) {
      if (out.route.back() != kDepot) {
        throw StitchError("plan " + Str(static_cast<int>(i + 1)) +
                          " is empty while the truck is at " +
                          Str(out.route.back()));
      }
      continue;
    }
    if (seg.route.front() != out.route.back()) {
      throw StitchError("plan " + Str(static_cast<int>(i + 1)) + " starts at " +
                        Str(seg.route.front()) + " but the truck is at " +
                        Str(out.route.back()));
    }
    const int stops = static_cast<int>(seg.route.size()) - 1;
    if (seg.executed < 0 || seg.executed > stops) {
      throw StitchError("plan " + Str(static_cast<int>(i + 1)) + " executes " +
                        Str(seg.executed) + " of " + Str(stops) + " stops");
    }
    out.route.insert(out.route.end(), seg.route.begin() + 1,
                     seg.route.begin() + 1 + seg.executed);
  }
  if (out.route.back() != kDepot) {
    throw StitchError("the last plan stops at " + Str(out.route.back()) +
                      " instead of the depot");
  }
  if (out.route.size() == 1) out.route.clear();
  out.distance = WalkDistance(instance, out.route);
  out.cost = initial_cost + instance.cost.RoutingCost(out.distance) +
             instance.cost.outsource_penalty * outsourced_count;
  return out;
}

Instance WithEvents(const Instance& instance,
                    const std::vector<RequestEvent>& events) {
  Instance out = instance;
  std::map<int, Point> extra;
  for (const RequestEvent& event : events) {
    const std::string where = "event at epoch " + Str(event.epoch);
    if (event.epoch < 1) throw InputError(where + ": epoch must be >= 1");
    for (Customer c : event.customers) {
      if (c.id <= 0) throw InputError(where + ": customer id must be positive");
      if (out.FindCustomer(c.id) != nullptr) {
        throw InputError(where + ": customer " + Str(c.id) + " already exists");
      }
      c.request_epoch = event.epoch;
      if (c.position) {
        extra[c.id] = *c.position;
      } else if (!out.distances.is_matrix()) {
        throw InputError(where + ": customer " + Str(c.id) + " has no position");
      }
      auto sizes = event.sizes.find(c.id);
      for (Scenario& s : out.scenarios.scenarios) {
        if (sizes != event.sizes.end() && sizes->second.count(s.id) > 0) {
          s.sizes[c.id] = sizes->second.at(s.id);
        } else if (c.demand_flag == 1) {
          throw InputError(where + ": customer " + Str(c.id) +
                           " has no size for scenario " + s.id);
        }
      }
      out.customers.push_back(c);
    }
    for (const auto& pair : event.dependencies) {
      out.dependencies.pairs.push_back(pair);
    }
  }
  std::sort(out.customers.begin(), out.customers.end(),
            [](const Customer& a, const Customer& b) { return a.id < b.id; });
  if (!extra.empty()) out.distances = out.distances.WithPoints(extra);
  return out;
}

std::pair<Instance, std::vector<RequestEvent>> SplitByEpoch(
    const Instance& instance) {
  Instance base = instance;
  std::map<int, RequestEvent> by_epoch;
  std::map<int, int> epoch_of;
  base.customers.clear();
  for (const Customer& c : instance.customers) {
    epoch_of[c.id] = c.request_epoch;
    if (c.request_epoch == 0) {
      base.customers.push_back(c);
      continue;
    }
    RequestEvent& event = by_epoch[c.request_epoch];
    event.epoch = c.request_epoch;
    event.customers.push_back(c);
    for (Scenario& s : base.scenarios.scenarios) {
      auto it = s.sizes.find(c.id);
      if (it == s.sizes.end()) continue;
      event.sizes[c.id][s.id] = it->second;
      s.sizes.erase(it);
    }
  }
  base.dependencies.pairs.clear();
  for (const auto& [a, b] : instance.dependencies.pairs) {
    const int ea = epoch_of.count(a) ? epoch_of[a] : 0;
    const int eb = epoch_of.count(b) ? epoch_of[b] : 0;
    const int e = std::max(ea, eb);
    if (e == 0) {
      base.dependencies.pairs.emplace_back(a, b);
    } else {
      by_epoch[e].epoch = e;
      by_epoch[e].dependencies.emplace_back(a, b);
    }
  }
  std::vector<RequestEvent> events;
  for (auto& [e, event] : by_epoch) events.push_back(std::move(event));
  return {std::move(base), std::move(events)};
}

namespace {

struct EventGroup {
  int epoch = 0;
  std::vector<int> customers;
  std::vector<std::pair<int, int>> dependencies;
};

class Simulator {
 public:
  Simulator(const Instance& instance, const std::vector<RequestEvent>& events,
            const SimulationSettings& settings)
      : settings_(settings) {
    auto [base, embedded] = SplitByEpoch(instance);
    for (const RequestEvent& e : events) embedded.push_back(e);
    std::stable_sort(embedded.begin(), embedded.end(),
                     [](const RequestEvent& a, const RequestEvent& b) {
                       return a.epoch < b.epoch;
                     });
    snapshot_ = WithEvents(base, embedded);
    const auto issues = ValidateInstance(snapshot_);
    if (!issues.empty()) throw InputError("invalid instance: " + issues.front());
    for (const RequestEvent& e : embedded) {
      if (groups_.empty() || groups_.back().epoch != e.epoch) {
        groups_.push_back({e.epoch, {}, {}});
      }
      for (const Customer& c : e.customers) {
        if (c.demand_flag == 1) groups_.back().customers.push_back(c.id);
      }
      for (const auto& d : e.dependencies) groups_.back().dependencies.push_back(d);
    }
    const ReplanTrigger& trigger = settings_.trigger;
    if (trigger.kind == ReplanTrigger::Kind::kKthFromRouteEnd && trigger.k < 1) {
      throw InputError("trigger k must be >= 1");
    }
    if (trigger.kind == ReplanTrigger::Kind::kAtEpochList) {
      if (trigger.stops.size() < groups_.size()) {
        throw InputError("trigger lists " + Str(static_cast<int>(trigger.stops.size())) +
                         " re-plans for " + Str(static_cast<int>(groups_.size())) +
                         " event epochs");
      }
      for (int s : trigger.stops) {
        if (s < 0) throw InputError("trigger stop counts must be >= 0");
      }
    }
    realized_ = settings_.realized_scenario.empty()
                    ? snapshot_.scenarios.scenarios.front().id
                    : settings_.realized_scenario;
    RealizedIndex(snapshot_, realized_);
  }

  SimulationResult Run() {
    state_ = InitialState(snapshot_, realized_);
    segments_.assign(state_.trucks.size(), {});
    {
      const RouteModelInput input = OfflineModelInput(snapshot_);
      const Plan plan = SolveOffline(snapshot_, settings_.milp);
      Adopt(plan);
      EpochRecord record = Record(plan, 0.0, 0);
      record.violations = CheckPlan(snapshot_, input, plan);
      records_.push_back(std::move(record));
    }
    std::size_t next = 0;
    std::size_t list_pos = 0;
    bool retry = false;
    while (next < groups_.size()) {
      const EventGroup& group = groups_[next];
      int trigger_truck = 0;
      int trigger_stop = 0;
      if (!HasWork()) {
        Return();
      } else {
        std::vector<int> executed = Counts(retry, list_pos, trigger_truck);
        for (std::size_t t = 0; t < executed.size(); ++t) {
          if (state_.trucks[t].truck_id == trigger_truck) trigger_stop = executed[t];
        }
        Drive(executed);
      }
      try {
        const RerouteSetup setup = PrepareReroute(
            snapshot_, state_, group.customers, group.dependencies);
        const Plan plan = SolveRouteModel(snapshot_, setup.input, settings_.milp,
                                          setup.continuation);
        state_.epoch = group.epoch;
        Adopt(plan);
        EpochRecord record = Record(plan, setup.committed_routing, group.epoch);
        record.trigger_truck = trigger_truck;
        record.trigger_stop = trigger_stop;
        record.violations = CheckPlan(snapshot_, setup.input, plan);
        record.continuation_objective = ContinuationObjective(setup);
        records_.push_back(std::move(record));
        ++next;
        retry = false;
      } catch (const ModelInfeasibleError& e) {
        EpochRecord record = Failure(group.epoch, e.what());
        record.trigger_truck = trigger_truck;
        record.trigger_stop = trigger_stop;
        if (!HasWork() && AllAtDepot()) {
          // Nothing left to retry from: the requests are turned away.
          state_.outsourced.insert(group.customers.begin(), group.customers.end());
          record.outsourced.assign(state_.outsourced.begin(), state_.outsourced.end());
          ++next;
          retry = false;
        } else {
          retry = true;
        }
        records_.push_back(std::move(record));
      }
    }
    std::vector<int> all(state_.trucks.size());
    for (std::size_t t = 0; t < all.size(); ++t) {
      all[t] = static_cast<int>(state_.trucks[t].remaining.size());
    }
    Drive(all);
    Return();
    return Result();
  }

 private:
  bool HasWork() const {
    for (const TruckState& t : state_.trucks) {
      if (!t.remaining.empty()) return true;
    }
    return false;
  }

  bool AllAtDepot() const {
    for (const TruckState& t : state_.trucks) {
      if (t.origin != kDepot) return false;
    }
    return true;
  }

  std::optional<double> ContinuationObjective(const RerouteSetup& setup) const {
    const RouteModel model = BuildRouteModel(snapshot_, setup.input);
    const std::vector<double> x = EncodeRoutes(model, setup.continuation);
    if (model.problem.MaxViolation(x) > kLoadTol) return std::nullopt;
    return model.problem.Evaluate(x) - setup.committed_routing;
  }

  // Stops each truck drives before the trigger fires.
  std::vector<int> Counts(bool retry, std::size_t& list_pos, int& trigger_truck) {
    const std::size_t n = state_.trucks.size();
    std::vector<int> target(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
      const int m = static_cast<int>(state_.trucks[t].remaining.size());
      if (m == 0) continue;
      if (retry) {
        target[t] = 1;
      } else if (settings_.trigger.kind == ReplanTrigger::Kind::kKthFromRouteEnd) {
        target[t] = std::max(m - settings_.trigger.k + 1, 1);
      } else {
        target[t] = std::min(settings_.trigger.stops[list_pos], m);
      }
    }
    if (!retry && settings_.trigger.kind == ReplanTrigger::Kind::kAtEpochList) {
      ++list_pos;
      for (std::size_t t = 0; t < n; ++t) {
        if (!state_.trucks[t].remaining.empty()) {
          trigger_truck = state_.trucks[t].truck_id;
          break;
        }
      }
      return target;
    }
    // The first truck to reach its trigger stop fires; the others stop at
    // the customers they reached by then.
    std::vector<std::vector<double>> clock(n);
    double fire = std::numeric_limits<double>::infinity();
    std::size_t first = n;
    for (std::size_t t = 0; t < n; ++t) {
      const TruckState& truck = state_.trucks[t];
      LocationId at = truck.origin;
      double d = 0.0;
      for (int c : truck.remaining) {
        d += snapshot_.distances.Distance(at, c);
        clock[t].push_back(d);
        at = c;
      }
      if (target[t] > 0 && clock[t][target[t] - 1] < fire - kClockTol) {
        fire = clock[t][target[t] - 1];
        first = t;
      }
    }
    std::vector<int> executed(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == first) {
        executed[t] = target[t];
        continue;
      }
      for (double d : clock[t]) {
        if (d <= fire + kClockTol) ++executed[t];
      }
    }
    trigger_truck = state_.trucks[first].truck_id;
    return executed;
  }

  void Drive(const std::vector<int>& executed) {
    state_ = ObserveState(snapshot_, state_, executed);
    for (std::size_t t = 0; t < executed.size(); ++t) {
      segments_[t].back().executed += executed[t];
    }
  }

  void Return() {
    for (std::size_t t = 0; t < state_.trucks.size(); ++t) {
      if (state_.trucks[t].origin != kDepot) segments_[t].back().executed += 1;
    }
    state_ = ReturnToDepot(snapshot_, state_);
  }

  void Adopt(const Plan& plan) {
    AdoptPlan(snapshot_, plan, state_);
    for (std::size_t t = 0; t < state_.trucks.size(); ++t) {
      segments_[t].push_back({TailRoute(state_.trucks[t]), 0});
    }
  }

  EpochRecord Base(int epoch) const {
    EpochRecord r;
    r.iteration = static_cast<int>(records_.size()) + 1;
    r.epoch = epoch;
    for (const TruckState& t : state_.trucks) {
      r.truck_ids.push_back(t.truck_id);
      r.origins.push_back(t.origin);
      r.loads.push_back(t.load);
      r.starting_weight += t.load;
    }
    r.outsourced.assign(state_.outsourced.begin(), state_.outsourced.end());
    r.served_count = static_cast<int>(state_.served_by.size() + state_.pending.size());
    return r;
  }

  EpochRecord Record(const Plan& plan, double committed, int epoch) const {
    EpochRecord r = Base(epoch);
    const auto w = static_cast<std::size_t>(
        std::find(plan.scenario_ids.begin(), plan.scenario_ids.end(), realized_) -
        plan.scenario_ids.begin());
    r.routes = plan.routes[w];
    for (std::size_t s = 0; s < plan.routes.size(); ++s) {
      if (plan.routes[s] == plan.routes[w]) {
        r.scenario = plan.scenario_ids[s];
        break;
      }
    }
    r.objective = plan.objective - committed;
    r.distance = plan.ExpectedDistance(snapshot_);
    r.gap = plan.gap;
    r.status = plan.status;
    r.node_count = plan.node_count;
    r.wall_time = plan.wall_time;
    return r;
  }

  EpochRecord Failure(int epoch, const std::string& why) const {
    EpochRecord r = Base(epoch);
    r.failed = true;
    r.failure = why;
    r.status = milp::SolveStatus::kInfeasible;
    r.scenario = realized_;
    for (const TruckState& t : state_.trucks) r.routes.push_back(TailRoute(t));
    return r;
  }

  SimulationResult Result() const {
    SimulationResult result;
    result.instance_name = snapshot_.name;
    result.realized_scenario = realized_;
    result.epochs = records_;
    result.outsourced.assign(state_.outsourced.begin(), state_.outsourced.end());
    result.requested = snapshot_.DemandingCustomerIds();
    for (std::size_t t = 0; t < state_.trucks.size(); ++t) {
      const TruckState& truck = state_.trucks[t];
      const double initial =
          truck.used ? snapshot_.FindTruck(truck.truck_id)->initial_cost : 0.0;
      const StitchedRoute stitched =
          StitchActualRoute(snapshot_, segments_[t], initial, 0);
      std::vector<LocationId> walk = truck.walk;
      if (walk.size() == 1) walk.clear();
      if (stitched.route != walk) {
        throw StateError("stitched route of truck " + Str(truck.truck_id) +
                         " differs from the driven walk");
      }
      result.truck_ids.push_back(truck.truck_id);
      result.actual_routes.push_back(stitched.route);
      result.trip_loads.push_back(truck.trip_loads);
      result.total_distance += stitched.distance;
      result.delivery_cost += stitched.cost;
    }
    result.total_cost = result.delivery_cost +
                        snapshot_.cost.outsource_penalty *
                            static_cast<double>(result.outsourced.size());
    return result;
  }

  SimulationSettings settings_;
  Instance snapshot_;
  std::vector<EventGroup> groups_;
  std::string realized_;
  SimulationState state_;
  std::vector<std::vector<PlanSegment>> segments_;
  std::vector<EpochRecord> records_;
};

}  // namespace

SimulationResult RunSimulation(const Instance& instance,
                               const std::vector<RequestEvent>& events,
                               const SimulationSettings& settings) {
  return Simulator(instance, events, settings).Run();
}

std::vector<std::string> CheckSimulation(const Instance& instance,
                                         const SimulationResult& result) {
  std::vector<std::string> issues;
  auto add = [&](std::string m) { issues.push_back(std::move(m)); };
  const int wr = instance.scenarios.IndexOf(result.realized_scenario);
  if (wr < 0) {
    add("unknown realized scenario " + result.realized_scenario);
    return issues;
  }
  std::map<int, int> visits;
  std::map<int, std::pair<int, int>> position;  // customer -> (truck, index)
  for (std::size_t t = 0; t < result.actual_routes.size(); ++t) {
    const auto& route = result.actual_routes[t];
    const int id = result.truck_ids[t];
    if (!route.empty() && (route.front() != kDepot || route.back() != kDepot)) {
      add("truck " + Str(id) + ": actual route must start and end at the depot");
    }
    const double capacity = instance.FindTruck(id)->capacity;
    std::size_t trip = 0;
    double load = 0.0;
    for (std::size_t i = 0; i < route.size(); ++i) {
      const int c = route[i];
      if (c == kDepot) {
        if (i + 1 < route.size()) {
          if (trip >= result.trip_loads[t].size()) {
            add("truck " + Str(id) + ": departure without a recorded load");
            load = 0.0;
          } else {
            load = result.trip_loads[t][trip];
          }
          ++trip;
          if (load < -kLoadTol || load > capacity + kLoadTol) {
            add("truck " + Str(id) + ": preload " + std::to_string(load) +
                " leaves [0, capacity]");
          }
        }
        continue;
      }
      ++visits[c];
      position[c] = {id, static_cast<int>(i)};
      load += instance.Size(c, wr);
      if (load < -kLoadTol || load > capacity + kLoadTol) {
        add("truck " + Str(id) + ": load " + std::to_string(load) +
            " after customer " + Str(c) + " leaves [0, capacity]");
      }
    }
  }
  const std::set<int> outsourced(result.outsourced.begin(), result.outsourced.end());
  for (int c : result.requested) {
    const int v = visits.count(c) ? visits[c] : 0;
    const bool out = outsourced.count(c) > 0;
    if (!((v == 1 && !out) || (v == 0 && out))) {
      add("customer " + Str(c) + " is visited " + Str(v) + " times and " +
          (out ? "outsourced" : "not outsourced"));
    }
  }
  for (const auto& [c, v] : visits) {
    if (std::find(result.requested.begin(), result.requested.end(), c) ==
        result.requested.end()) {
      add("customer " + Str(c) + " was never requested");
    }
  }
  for (const auto& [a, b] : instance.dependencies.pairs) {
    const bool out_a = outsourced.count(a) > 0;
    const bool out_b = outsourced.count(b) > 0;
    if (out_a != out_b) {
      add("dependency (" + Str(a) + "," + Str(b) + ") is half outsourced");
      continue;
    }
    auto pa = position.find(a);
    auto pb = position.find(b);
    if (pa == position.end() || pb == position.end()) continue;
    if (pa->second.first != pb->second.first) {
      add("dependency (" + Str(a) + "," + Str(b) + ") spans two trucks");
    } else if (pa->second.second > pb->second.second) {
      add("dependency (" + Str(a) + "," + Str(b) + ") is visited out of order");
    }
  }
  for (const EpochRecord& r : result.epochs) {
    for (const auto& v : r.violations) {
      add("plan " + Str(r.iteration) + ": " + v);
    }
    if (r.failed) continue;
    if (r.status == milp::SolveStatus::kOptimal && r.continuation_objective &&
        r.objective > *r.continuation_objective + 1e-6) {
      add("plan " + Str(r.iteration) + ": objective " + std::to_string(r.objective) +
          " exceeds the continuation " + std::to_string(*r.continuation_objective));
    }
    for (std::size_t t = 0; t < r.routes.size(); ++t) {
      const auto& route = r.routes[t];
      if (route.empty()) continue;
      if (route.front() != r.origins[t] || route.back() != kDepot) {
        add("plan " + Str(r.iteration) + ": truck " + Str(r.truck_ids[t]) +
            " is not anchored at its origin and the depot");
      }
    }
  }
  return issues;
}

}  // namespace pdpsd
