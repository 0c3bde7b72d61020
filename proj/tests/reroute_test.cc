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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pdpsd/core/cost.h"
#include "pdpsd/core/errors.h"
#include "pdpsd/experiments/fixtures.h"
#include "pdpsd/planning/offline.h"
#include "pdpsd/planning/reroute.h"
#include "sim_oracle.h"

namespace pdpsd {
namespace {

const SolomonData& C101() {
  static const SolomonData data = ReadSolomonFile(PDPSD_TEST_DATA "/C101_25.txt");
  return data;
}

Plan OneRoute(const Instance& instance, const std::string& scenario,
              std::vector<LocationId> route) {
  Plan plan;
  plan.scenario_ids = {scenario};
  plan.probabilities = {1.0};
  plan.truck_ids = {instance.trucks.at(0).id};
  plan.truck_used[plan.truck_ids[0]] = true;
  plan.routes = {{std::move(route)}};
  return plan;
}

const std::vector<LocationId> kFirst{0, 2, 4, 5, 7, 8, 1, 6, 10, 3, 9, 0};
const std::vector<LocationId> kSecond{10, 15, 11, 3, 9, 13, 12, 14, 0};

double Walk(const Instance& instance, const std::vector<LocationId>& stops) {
  double d = 0.0;
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    const Point a = stops[i] == 0 ? instance.distances.depot()
                                  : instance.distances.points().at(stops[i]);
    const Point b = stops[i + 1] == 0 ? instance.distances.depot()
                                      : instance.distances.points().at(stops[i + 1]);
    d += std::hypot(a.x - b.x, a.y - b.y);
  }
  return d;
}

// Far-away customers plus one near the depot, one truck, single scenario.
Instance Small(double penalty) {
  Instance instance;
  instance.name = "small";
  std::map<int, Point> points{{1, {3, 0}}, {2, {3, 3}}};
  instance.customers = {{1, points[1], 1, 0}, {2, points[2], 1, 0}};
  instance.distances = DistanceProvider::FromCoordinates({0, 0}, points);
  instance.trucks = {{1, 20.0, 1.0}};
  instance.scenarios.scenarios = {{"w1", 1.0, {{1, 4.0}, {2, -3.0}}}};
  instance.cost.outsource_penalty = penalty;
  return instance;
}

RequestEvent Event(int epoch, int id, Point p, double size) {
  RequestEvent e;
  e.epoch = epoch;
  e.customers = {Customer{id, p, 1, epoch}};
  e.sizes[id]["w1"] = size;
  return e;
}

TEST(ObserveStateTest, FollowsTheTraceWeights) {
  const Instance instance = ReplanTraceInstance(C101());
  SimulationState state = InitialState(instance, "w2");
  AdoptPlan(instance, OneRoute(instance, "w2", kFirst), state);
  EXPECT_DOUBLE_EQ(state.trucks[0].load, 50.0);
  state = ObserveState(instance, state, {8});
  EXPECT_EQ(state.trucks[0].origin, 10);
  EXPECT_DOUBLE_EQ(state.trucks[0].load, 10.0);
  EXPECT_EQ(state.pending, (std::set<int>{3, 9}));
  state = ObserveState(instance, state, OneRoute(instance, "w2", kSecond), {5});
  EXPECT_EQ(state.trucks[0].origin, 13);
  EXPECT_DOUBLE_EQ(state.trucks[0].load, 30.0);
}

TEST(ObserveStateTest, ZeroStopsLeaveTheStateAlone) {
  const Instance instance = ReplanTraceInstance(C101());
  SimulationState state = InitialState(instance, "w2");
  AdoptPlan(instance, OneRoute(instance, "w2", kFirst), state);
  const SimulationState next = ObserveState(instance, state, {0});
  EXPECT_EQ(next.trucks[0].origin, state.trucks[0].origin);
  EXPECT_EQ(next.trucks[0].remaining, state.trucks[0].remaining);
  EXPECT_EQ(next.served, state.served);
}

TEST(ObserveStateTest, RejectsPrefixLongerThanRoute) {
  const Instance instance = ReplanTraceInstance(C101());
  SimulationState state = InitialState(instance, "w2");
  AdoptPlan(instance, OneRoute(instance, "w2", kFirst), state);
  EXPECT_THROW(ObserveState(instance, state, {11}), StateError);
  EXPECT_THROW(ObserveState(instance, state, {1, 1}), StateError);
}

TEST(ObserveStateTest, RejectsOverload) {
  Instance instance = ReplanTraceInstance(C101());
  instance.trucks[0].capacity = 40.0;
  SimulationState state = InitialState(instance, "w2");
  AdoptPlan(instance, OneRoute(instance, "w2", kFirst), state);
  EXPECT_THROW(ObserveState(instance, state, {1}), StateError);
}

TEST(StitchTest, SinglePlanIsItself) {
  const Instance instance = ReplanTraceInstance(C101());
  const StitchedRoute s = StitchActualRoute(instance, {{kFirst, 11}}, 0.0, 0);
  EXPECT_EQ(s.route, kFirst);
  EXPECT_NEAR(s.distance, Walk(instance, kFirst), 1e-9);
}

TEST(StitchTest, AbandonedTailsAreNotCounted) {
  const Instance instance = ReplanTraceInstance(C101());
  const StitchedRoute s =
      StitchActualRoute(instance, {{kFirst, 8}, {kSecond, 8}}, 2.0, 4);
  const std::vector<LocationId> driven{0, 2, 4, 5, 7, 8, 1, 6, 10,
                                       15, 11, 3, 9, 13, 12, 14, 0};
  EXPECT_EQ(s.route, driven);
  const double expected = Walk(instance, {0, 2, 4, 5, 7, 8, 1, 6, 10}) +
                          Walk(instance, kSecond);
  EXPECT_NEAR(s.distance, expected, 1e-9);
  EXPECT_LT(s.distance, Walk(instance, kFirst) + Walk(instance, kSecond));
  EXPECT_NEAR(s.cost, 2.0 + 0.105 * expected + 16.0 * 4, 1e-9);
}

TEST(StitchTest, GapBetweenPlansThrows) {
  const Instance instance = ReplanTraceInstance(C101());
  EXPECT_THROW(StitchActualRoute(instance, {{kFirst, 7}, {kSecond, 8}}, 0.0, 0),
               StitchError);
  EXPECT_THROW(StitchActualRoute(instance, {{kFirst, 8}, {kSecond, 3}}, 0.0, 0),
               StitchError);
}

TEST(RunSimulationTest, WithoutEventsMatchesTheOfflinePlan) {
  const Instance instance = Small(50.0);
  const Plan offline = SolveOffline(instance);
  const SimulationResult r = RunSimulation(instance, {}, {});
  ASSERT_EQ(r.actual_routes.size(), 1u);
  EXPECT_EQ(r.actual_routes[0], offline.routes[0][0]);
  EXPECT_NEAR(r.total_cost, offline.objective, 1e-9);
  EXPECT_TRUE(CheckSimulation(instance, r).empty());
}

TEST(RunSimulationTest, FreeOutsourcingTurnsAwayNewCustomers) {
  const Instance instance = Small(0.0);
  const std::vector<RequestEvent> events{Event(1, 3, {1, 0}, 1.0)};
  const SimulationResult r = RunSimulation(instance, events, {});
  EXPECT_EQ(r.outsourced, (std::vector<int>{1, 2, 3}));
  EXPECT_NEAR(r.total_cost, 0.0, 1e-9);
}

TEST(RunSimulationTest, UnusedTruckStaysUnused) {
  // Serving 1 and 2 is dearer than outsourcing both; the late customer next
  // to the depot would be worth a trip but the truck was never dispatched.
  Instance instance = Small(1.5);
  instance.trucks[0].initial_cost = 5.0;
  const std::vector<RequestEvent> events{Event(1, 3, {0.5, 0}, 1.0)};
  const SimulationResult r = RunSimulation(instance, events, {});
  EXPECT_EQ(r.outsourced, (std::vector<int>{1, 2, 3}));
  const Instance full = WithEvents(instance, events);
  EXPECT_TRUE(CheckSimulation(full, r).empty());
}

TEST(RunSimulationTest, PickupBeyondResidualCapacityIsOutsourced) {
  const Instance instance = Small(100.0);
  const std::vector<RequestEvent> events{Event(1, 3, {4, 0}, 19.0)};
  SimulationSettings settings;
  settings.trigger = ReplanTrigger::KthFromRouteEnd(2);
  const SimulationResult r = RunSimulation(instance, events, settings);
  const Instance full = WithEvents(instance, events);
  EXPECT_TRUE(CheckSimulation(full, r).empty());
  EXPECT_EQ(r.outsourced, (std::vector<int>{3}));
}

TEST(RunSimulationTest, DependencyOnServedCustomerIsAFailure) {
  const Instance instance = Small(100.0);
  RequestEvent e = Event(1, 3, {1, 1}, 1.0);
  SimulationSettings settings;
  settings.trigger = ReplanTrigger::KthFromRouteEnd(1);
  const SimulationResult plain = RunSimulation(instance, {e}, settings);
  const int first = plain.actual_routes[0][1];
  // 3 would have to come before a customer that is already behind us.
  e.dependencies = {{3, first}};
  const SimulationResult r = RunSimulation(instance, {e}, settings);
  bool failed = false;
  for (const EpochRecord& rec : r.epochs) failed = failed || rec.failed;
  EXPECT_TRUE(failed);
  const Instance full = WithEvents(instance, {e});
  // The request cannot be honoured; the checker reports it instead of
  // letting it pass silently.
  EXPECT_EQ(CheckSimulation(full, r),
            std::vector<std::string>{"dependency (3," + std::to_string(first) +
                                     ") is half outsourced"});
  EXPECT_NE(std::find(r.outsourced.begin(), r.outsourced.end(), 3), r.outsourced.end());
}

TEST(RunSimulationTest, EffectivenessFixtureWithLaterTrigger) {
  const Instance instance = RerouteEffectivenessInstance(C101(), {10, 5, 5, 5});
  SimulationSettings settings;
  settings.trigger = ReplanTrigger::KthFromRouteEnd(5);
  const SimulationResult r = RunSimulation(instance, {}, settings);
  EXPECT_TRUE(CheckSimulation(instance, r).empty());
  EXPECT_TRUE(testing_util::OracleCheck(instance, r).empty());
  EXPECT_GE(r.epochs.size(), 2u);
}

TEST(RunSimulationTest, EpochListTriggerNeedsEnoughEntries) {
  const Instance instance = Small(100.0);
  SimulationSettings settings;
  settings.trigger = ReplanTrigger::AtEpochList({});
  EXPECT_THROW(RunSimulation(instance, {Event(1, 3, {1, 1}, 1.0)}, settings),
               InputError);
}

TEST(RunSimulationTest, RandomRunsKeepInvariants) {
  std::mt19937 rng(99);
  for (int t = 0; t < 15; ++t) {
    const testing_util::SimulationCase c = testing_util::RandomSimulationCase(rng);
    SimulationSettings settings;
    settings.trigger = ReplanTrigger::KthFromRouteEnd(c.k);
    settings.realized_scenario = c.realized;
    const SimulationResult r = RunSimulation(c.base, c.events, settings);
    const Instance full = WithEvents(c.base, c.events);
    const auto issues = CheckSimulation(full, r);
    EXPECT_TRUE(issues.empty()) << "trial " << t << ": " << issues.front();
    const auto oracle = testing_util::OracleCheck(full, r);
    EXPECT_TRUE(oracle.empty()) << "trial " << t << ": " << oracle.front();
  }
}

}  // namespace
}  // namespace pdpsd
