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

// Re-route simulation: trucks drive the current plan, requests arrive in
// epochs, and at each trigger point the remaining work is re-optimized from
// the trucks' current positions.

#ifndef PDPSD_PLANNING_REROUTE_H_
#define PDPSD_PLANNING_REROUTE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pdpsd/core/instance.h"
#include "pdpsd/milp/problem.h"
#include "pdpsd/planning/plan.h"
#include "pdpsd/planning/route_model.h"

namespace pdpsd {

// Requests that become known at `epoch` (>= 1).
struct RequestEvent {
  int epoch = 1;
  std::vector<Customer> customers;
  // Customer id -> scenario id -> signed size.
  std::map<int, std::map<std::string, double>> sizes;
  std::vector<std::pair<int, int>> dependencies;
};

struct ReplanTrigger {
  enum class Kind { kKthFromRouteEnd, kAtEpochList };

  Kind kind = Kind::kKthFromRouteEnd;
  int k = 3;
  // kAtEpochList: re-plan i happens after stops[i] more executed stops.
  std::vector<int> stops;

  static ReplanTrigger KthFromRouteEnd(int k);
  static ReplanTrigger AtEpochList(std::vector<int> stops);
};

struct TruckState {
  int truck_id = 0;
  bool used = false;
  LocationId origin = kDepot;
  // Onboard weight at the origin. At the depot: the preload of `remaining`.
  double load = 0.0;
  // Planned stops after the origin under the realized scenario, depot
  // excluded.
  std::vector<LocationId> remaining;
  // Delivery packages loaded at the last depot departure and not yet dropped.
  std::set<int> onboard;
  // Executed walk: starts at the depot and ends at `origin`.
  std::vector<LocationId> walk;
  // Preload of every depot departure along `walk`.
  std::vector<double> trip_loads;
};

struct SimulationState {
  int epoch = 0;
  std::string realized_scenario;
  std::vector<TruckState> trucks;
  std::set<int> served;      // visited customers other than current origins
  std::map<int, int> served_by;  // visited customer (origins too) -> truck id
  std::set<int> pending;     // planned, not yet visited
  std::set<int> outsourced;  // final

  const TruckState* FindTruck(int truck_id) const;
};

// Every truck parked at the depot, nothing planned.
SimulationState InitialState(const Instance& instance,
                             const std::string& realized_scenario);

// Makes `plan` the current plan: each truck follows its route of the realized
// scenario. Outsourcing in the plan becomes final. Depot trucks load their
// delivery packages. Throws StateError when the plan does not start at the
// trucks' origins.
void AdoptPlan(const Instance& instance, const Plan& plan,
               SimulationState& state);

// Drives truck t through executed[t] stops of its remaining route and
// returns the state there: the last visited customer becomes the origin and
// the load follows the realized sizes. Throws StateError when a count exceeds
// the remaining route or the load leaves [0, capacity].
SimulationState ObserveState(const Instance& instance,
                             const SimulationState& state,
                             const std::vector<int>& executed);

// AdoptPlan followed by ObserveState.
SimulationState ObserveState(const Instance& instance,
                             const SimulationState& state, const Plan& plan,
                             const std::vector<int>& executed);

// Sends every truck that is out on the road back to the depot.
SimulationState ReturnToDepot(const Instance& instance,
                              const SimulationState& state);

struct RerouteSetup {
  RouteModelInput input;
  // Previous tails plus every new customer outsourced.
  RouteChoice continuation;
  double committed_routing = 0.0;
};

// Model input for re-planning at `state`. `instance` already holds the new
// customers; `fresh` lists the ids and dependency pairs that arrived with the
// events being integrated. Throws ModelInfeasibleError when a dependency can
// no longer be honoured.
RerouteSetup PrepareReroute(const Instance& instance,
                            const SimulationState& state,
                            const std::vector<int>& fresh_customers,
                            const std::vector<std::pair<int, int>>&
                                fresh_dependencies);

milp::MilpProblem BuildRerouteMilp(const Instance& instance,
                                   const SimulationState& state,
                                   const std::vector<int>& fresh_customers,
                                   const std::vector<std::pair<int, int>>&
                                       fresh_dependencies);

// One plan's route (origin first, depot last) and the number of stops
// driven after its origin; the final depot counts as a stop.
struct PlanSegment {
  std::vector<LocationId> route;
  int executed = 0;
};

struct StitchedRoute {
  std::vector<LocationId> route;
  double distance = 0.0;
  double cost = 0.0;
};

// Concatenates the executed prefixes of consecutive plans. Each plan must
// start where the previous prefix stopped and the last one must reach the
// depot. cost = initial_cost + routing cost + penalty x outsourced_count.
// Throws StitchError otherwise.
StitchedRoute StitchActualRoute(const Instance& instance,
                                const std::vector<PlanSegment>& segments,
                                double initial_cost, int outsourced_count);

struct EpochRecord {
  int iteration = 0;  // 1-based
  int epoch = 0;      // highest request epoch integrated
  bool failed = false;
  std::string failure;
  int trigger_truck = 0;  // 0 for the offline plan and depot restarts
  int trigger_stop = 0;   // executed stops of the trigger truck
  std::vector<int> truck_ids;
  std::vector<LocationId> origins;
  std::vector<double> loads;
  double starting_weight = 0.0;
  std::string scenario;  // first scenario sharing the realized routes
  std::vector<std::vector<LocationId>> routes;  // realized scenario
  std::vector<int> outsourced;  // final outsourcing after this plan
  double objective = 0.0;  // model objective without committed routing
  // Same measure for the previous tails with every new customer outsourced;
  // unset when that continuation breaks a model constraint.
  std::optional<double> continuation_objective;
  double distance = 0.0;   // expected distance of the plan
  double gap = 0.0;
  milp::SolveStatus status = milp::SolveStatus::kOptimal;
  long node_count = 0;
  double wall_time = 0.0;
  int served_count = 0;  // visited or planned to be visited
  std::vector<std::string> violations;
};

struct SimulationResult {
  std::string instance_name;
  std::string realized_scenario;
  std::vector<EpochRecord> epochs;
  std::vector<int> truck_ids;
  std::vector<std::vector<LocationId>> actual_routes;
  std::vector<std::vector<double>> trip_loads;
  std::vector<int> outsourced;
  std::vector<int> requested;  // every customer ever requested
  double total_distance = 0.0;
  double delivery_cost = 0.0;  // initial costs + routing
  double total_cost = 0.0;     // delivery cost + penalties
};

struct SimulationSettings {
  ReplanTrigger trigger;
  std::string realized_scenario;  // empty: the first scenario
  milp::MilpSettings milp;
};

// Adds the events' customers, sizes and dependencies to `instance`. Throws
// InputError for reused ids or missing sizes.
Instance WithEvents(const Instance& instance,
                    const std::vector<RequestEvent>& events);

// Splits an instance whose customers carry request epochs into the epoch-0
// instance and one event per later epoch.
std::pair<Instance, std::vector<RequestEvent>> SplitByEpoch(
    const Instance& instance);

// Runs the offline plan and then every event. Throws ModelInfeasibleError if
// the offline plan fails and InputError for bad events or triggers.
SimulationResult RunSimulation(const Instance& instance,
                               const std::vector<RequestEvent>& events,
                               const SimulationSettings& settings);

// Invariants of a finished run: conservation of customers, load along every
// trip under the realized sizes, dependency order and coupling, anchoring
// and per-plan checks. `instance` must include the events.
std::vector<std::string> CheckSimulation(const Instance& instance,
                                         const SimulationResult& result);

}  // namespace pdpsd

#endif  // PDPSD_PLANNING_REROUTE_H_
