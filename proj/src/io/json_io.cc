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

#include "pdpsd/io/json_io.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "pdpsd/core/cost.h"
#include "pdpsd/core/errors.h"

namespace pdpsd {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& rule) {
  throw SchemaError((path.empty() ? std::string("$") : path) + ": " + rule);
}

std::string Child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string Item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& Object(const json& v, const std::string& path,
                   std::initializer_list<const char*> allowed) {
  if (!v.is_object()) Fail(path, "expected an object");
  for (const auto& [key, value] : v.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) Fail(Child(path, key), "unknown key");
  }
  return v;
}

const json& Array(const json& v, const std::string& path) {
  if (!v.is_array()) Fail(path, "expected an array");
  return v;
}

double Number(const json& v, const std::string& path) {
  if (!v.is_number()) Fail(path, "expected a number");
  return v.get<double>();
}

int Integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) Fail(path, "expected an integer");
  return v.get<int>();
}

std::string String(const json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "expected a string");
  return v.get<std::string>();
}

const json& Required(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(Child(path, key), "required key missing");
  return *it;
}

json Parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("$: not valid JSON (") + e.what() + ")");
  }
}

Point ParsePoint(const json& v, const std::string& path) {
  Object(v, path, {"x", "y"});
  return {Number(Required(v, path, "x"), Child(path, "x")),
          Number(Required(v, path, "y"), Child(path, "y"))};
}

std::vector<std::pair<int, int>> ParsePairs(const json& v,
                                            const std::string& path) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < Array(v, path).size(); ++i) {
    const std::string at = Item(path, i);
    const json& p = v[i];
    if (!p.is_array() || p.size() != 2) Fail(at, "expected a pair [i, j]");
    pairs.emplace_back(Integer(p[0], Item(at, 0)), Integer(p[1], Item(at, 1)));
  }
  return pairs;
}

// Customer fields shared by instance and event documents. Sizes go to
// `sizes` keyed by scenario id.
Customer ParseCustomer(const json& v, const std::string& path, bool with_epoch,
                       std::map<std::string, double>& sizes) {
  if (with_epoch) {
    Object(v, path, {"id", "x", "y", "k", "requestEpoch", "sizes"});
  } else {
    Object(v, path, {"id", "x", "y", "k", "sizes"});
  }
  Customer c;
  c.id = Integer(Required(v, path, "id"), Child(path, "id"));
  if (c.id <= 0) Fail(Child(path, "id"), "id must be positive");
  const bool has_x = v.contains("x");
  const bool has_y = v.contains("y");
  if (has_x != has_y) Fail(path, "x and y come together");
  if (has_x) {
    c.position = Point{Number(v["x"], Child(path, "x")),
                       Number(v["y"], Child(path, "y"))};
  }
  if (v.contains("k")) {
    c.demand_flag = Integer(v["k"], Child(path, "k"));
    if (c.demand_flag != 0 && c.demand_flag != 1) {
      Fail(Child(path, "k"), "k ∉ {0,1}");
    }
  }
  if (with_epoch && v.contains("requestEpoch")) {
    c.request_epoch = Integer(v["requestEpoch"], Child(path, "requestEpoch"));
    if (c.request_epoch < 0) Fail(Child(path, "requestEpoch"), "requestEpoch < 0");
  }
  if (v.contains("sizes")) {
    const std::string sp = Child(path, "sizes");
    if (!v["sizes"].is_object()) Fail(sp, "expected an object");
    for (const auto& [id, size] : v["sizes"].items()) {
      sizes[id] = Number(size, Child(sp, id));
    }
  }
  return c;
}

json CustomerJson(const Customer& c, const std::vector<Scenario>& scenarios,
                  bool with_epoch) {
  json out;
  out["id"] = c.id;
  if (c.position) {
    out["x"] = c.position->x;
    out["y"] = c.position->y;
  }
  out["k"] = c.demand_flag;
  if (with_epoch) out["requestEpoch"] = c.request_epoch;
  json sizes = json::object();
  for (const Scenario& s : scenarios) {
    auto it = s.sizes.find(c.id);
    if (it != s.sizes.end()) sizes[s.id] = it->second;
  }
  out["sizes"] = sizes;
  return out;
}

json PairsJson(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

json RoutesJson(const Instance& instance, const std::vector<int>& truck_ids,
                const std::vector<std::vector<LocationId>>& routes) {
  json out = json::array();
  for (std::size_t t = 0; t < routes.size(); ++t) {
    out.push_back({{"truck", truck_ids[t]},
                   {"stops", routes[t]},
                   {"distance", RoundMilli(WalkDistance(instance, routes[t]))}});
  }
  return out;
}

std::string Stop(LocationId id) {
  return id == kDepot ? std::string("Depot") : "c" + std::to_string(id);
}

std::string OutsourcedText(const std::vector<int>& ids) {
  std::string out;
  for (int c : ids) {
    if (!out.empty()) out += ";";
    out += Stop(c);
  }
  return out;
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

Instance ParseInstanceJson(const std::string& text) {
  const json doc = Parse(text);
  Object(doc, "", {"name", "depot", "distanceMatrix", "customers", "trucks",
                   "dependencies", "cost", "scenarios"});
  Instance instance;
  if (doc.contains("name")) instance.name = String(doc["name"], "name");

  const bool has_depot = doc.contains("depot");
  const bool has_matrix = doc.contains("distanceMatrix");
  if (has_depot == has_matrix) {
    Fail("", "exactly one of depot / distanceMatrix is required");
  }

  const json& scen = Array(Required(doc, "", "scenarios"), "scenarios");
  std::set<std::string> scenario_ids;
  for (std::size_t i = 0; i < scen.size(); ++i) {
    const std::string at = Item("scenarios", i);
    Object(scen[i], at, {"id", "probability"});
    Scenario s;
    s.id = String(Required(scen[i], at, "id"), Child(at, "id"));
    if (s.id.empty()) Fail(Child(at, "id"), "id must not be empty");
    if (!scenario_ids.insert(s.id).second) Fail(Child(at, "id"), "duplicate id");
    s.probability = Number(Required(scen[i], at, "probability"),
                           Child(at, "probability"));
    if (!(s.probability >= 0.0 && s.probability <= 1.0)) {
      Fail(Child(at, "probability"), "probability ∉ [0,1]");
    }
    instance.scenarios.scenarios.push_back(std::move(s));
  }

  std::map<int, Point> points;
  const json& customers = Array(Required(doc, "", "customers"), "customers");
  for (std::size_t i = 0; i < customers.size(); ++i) {
    const std::string at = Item("customers", i);
    std::map<std::string, double> sizes;
    Customer c = ParseCustomer(customers[i], at, true, sizes);
    if (has_depot && !c.position) Fail(at, "coordinates x, y required");
    if (has_matrix && c.position) Fail(at, "coordinates conflict with distanceMatrix");
    if (instance.FindCustomer(c.id) != nullptr) Fail(Child(at, "id"), "duplicate id");
    for (const auto& [id, size] : sizes) {
      const int w = instance.scenarios.IndexOf(id);
      if (w < 0) Fail(Child(Child(at, "sizes"), id), "unknown scenario");
      instance.scenarios.scenarios[w].sizes[c.id] = size;
    }
    if (c.position) points[c.id] = *c.position;
    instance.customers.push_back(c);
  }
  std::sort(instance.customers.begin(), instance.customers.end(),
            [](const Customer& a, const Customer& b) { return a.id < b.id; });

  if (has_depot) {
    instance.distances =
        DistanceProvider::FromCoordinates(ParsePoint(doc["depot"], "depot"), points);
  } else {
    std::vector<std::vector<double>> m;
    const json& rows = Array(doc["distanceMatrix"], "distanceMatrix");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string at = Item("distanceMatrix", r);
      std::vector<double> row;
      for (std::size_t c = 0; c < Array(rows[r], at).size(); ++c) {
        row.push_back(Number(rows[r][c], Item(at, c)));
      }
      m.push_back(std::move(row));
    }
    instance.distances = DistanceProvider::FromMatrix(std::move(m));
  }

  const json& trucks = Array(Required(doc, "", "trucks"), "trucks");
  for (std::size_t i = 0; i < trucks.size(); ++i) {
    const std::string at = Item("trucks", i);
    Object(trucks[i], at, {"id", "capacity", "initialCost"});
    Truck t;
    t.id = Integer(Required(trucks[i], at, "id"), Child(at, "id"));
    t.capacity = Number(Required(trucks[i], at, "capacity"), Child(at, "capacity"));
    if (trucks[i].contains("initialCost")) {
      t.initial_cost = Number(trucks[i]["initialCost"], Child(at, "initialCost"));
    }
    instance.trucks.push_back(t);
  }

  if (doc.contains("dependencies")) {
    instance.dependencies.pairs = ParsePairs(doc["dependencies"], "dependencies");
  }
  if (doc.contains("cost")) {
    const json& cost = Object(doc["cost"], "cost",
                              {"fuelConsumption", "fuelPrice", "outsourcePenalty"});
    if (cost.contains("fuelConsumption")) {
      instance.cost.fuel_consumption =
          Number(cost["fuelConsumption"], "cost.fuelConsumption");
    }
    if (cost.contains("fuelPrice")) {
      instance.cost.fuel_price = Number(cost["fuelPrice"], "cost.fuelPrice");
    }
    if (cost.contains("outsourcePenalty")) {
      instance.cost.outsource_penalty =
          Number(cost["outsourcePenalty"], "cost.outsourcePenalty");
    }
  }

  const auto issues = ValidateInstance(instance);
  if (!issues.empty()) {
    std::string message = "$: " + issues.front();
    for (std::size_t i = 1; i < issues.size(); ++i) message += "; " + issues[i];
    throw SchemaError(message);
  }
  return instance;
}

std::string InstanceToJson(const Instance& instance) {
  json doc;
  doc["name"] = instance.name;
  const DistanceProvider& d = instance.distances;
  if (d.is_matrix()) {
    doc["distanceMatrix"] = d.matrix();
  } else {
    doc["depot"] = {{"x", d.depot().x}, {"y", d.depot().y}};
  }
  json customers = json::array();
  for (const Customer& c : instance.customers) {
    Customer copy = c;
    if (!d.is_matrix() && !copy.position) {
      auto it = d.points().find(c.id);
      if (it != d.points().end()) copy.position = it->second;
    }
    customers.push_back(CustomerJson(copy, instance.scenarios.scenarios, true));
  }
  doc["customers"] = customers;
  json trucks = json::array();
  for (const Truck& t : instance.trucks) {
    trucks.push_back(
        {{"id", t.id}, {"capacity", t.capacity}, {"initialCost", t.initial_cost}});
  }
  doc["trucks"] = trucks;
  doc["dependencies"] = PairsJson(instance.dependencies.pairs);
  doc["cost"] = {{"fuelConsumption", instance.cost.fuel_consumption},
                 {"fuelPrice", instance.cost.fuel_price},
                 {"outsourcePenalty", instance.cost.outsource_penalty}};
  json scenarios = json::array();
  for (const Scenario& s : instance.scenarios.scenarios) {
    scenarios.push_back({{"id", s.id}, {"probability", s.probability}});
  }
  doc["scenarios"] = scenarios;
  return DumpJson(doc);
}

EventsDocument ParseEventsJson(const std::string& text) {
  const json doc = Parse(text);
  Object(doc, "", {"realizedScenario", "events"});
  EventsDocument out;
  if (doc.contains("realizedScenario")) {
    out.realized_scenario = String(doc["realizedScenario"], "realizedScenario");
  }
  if (!doc.contains("events")) return out;
  const json& events = Array(doc["events"], "events");
  int last_epoch = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string at = Item("events", i);
    Object(events[i], at, {"epoch", "customers", "dependencies"});
    RequestEvent e;
    e.epoch = Integer(Required(events[i], at, "epoch"), Child(at, "epoch"));
    if (e.epoch < 1) Fail(Child(at, "epoch"), "epoch < 1");
    if (e.epoch < last_epoch) Fail(Child(at, "epoch"), "events not sorted by epoch");
    last_epoch = e.epoch;
    if (events[i].contains("customers")) {
      const std::string cp = Child(at, "customers");
      const json& cs = Array(events[i]["customers"], cp);
      for (std::size_t j = 0; j < cs.size(); ++j) {
        std::map<std::string, double> sizes;
        Customer c = ParseCustomer(cs[j], Item(cp, j), false, sizes);
        c.request_epoch = e.epoch;
        e.sizes[c.id] = sizes;
        e.customers.push_back(c);
      }
    }
    if (events[i].contains("dependencies")) {
      e.dependencies = ParsePairs(events[i]["dependencies"], Child(at, "dependencies"));
    }
    out.events.push_back(std::move(e));
  }
  return out;
}

std::string EventsToJson(const EventsDocument& document) {
  json doc;
  if (!document.realized_scenario.empty()) {
    doc["realizedScenario"] = document.realized_scenario;
  }
  json events = json::array();
  for (const RequestEvent& e : document.events) {
    json customers = json::array();
    for (const Customer& c : e.customers) {
      json item;
      item["id"] = c.id;
      if (c.position) {
        item["x"] = c.position->x;
        item["y"] = c.position->y;
      }
      item["k"] = c.demand_flag;
      json sizes = json::object();
      auto it = e.sizes.find(c.id);
      if (it != e.sizes.end()) {
        for (const auto& [id, size] : it->second) sizes[id] = size;
      }
      item["sizes"] = sizes;
      customers.push_back(item);
    }
    events.push_back({{"epoch", e.epoch},
                      {"customers", customers},
                      {"dependencies", PairsJson(e.dependencies)}});
  }
  doc["events"] = events;
  return DumpJson(doc);
}

std::string ReadTextFile(const std::string& path, const std::string& what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(what + " not found: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("cannot write " + path);
}

Instance LoadInstanceFile(const std::string& path) {
  return ParseInstanceJson(ReadTextFile(path, "instance"));
}

EventsDocument LoadEventsFile(const std::string& path) {
  return ParseEventsJson(ReadTextFile(path, "events"));
}

nlohmann::json PlanJson(const Instance& instance, const Plan& plan) {
  json doc;
  doc["kind"] = "plan";
  doc["instance"] = instance.name;
  doc["status"] = milp::ToString(plan.status);
  doc["objective"] = RoundMilli(plan.objective);
  doc["gap"] = plan.gap;
  doc["nodes"] = plan.node_count;
  doc["expectedDistance"] = RoundMilli(plan.ExpectedDistance(instance));
  json used = json::array();
  for (const auto& [id, u] : plan.truck_used) {
    if (u) used.push_back(id);
  }
  doc["trucksUsed"] = used;
  doc["outsourced"] = plan.outsourced;
  json scenarios = json::array();
  for (std::size_t w = 0; w < plan.routes.size(); ++w) {
    scenarios.push_back(
        {{"id", plan.scenario_ids[w]},
         {"probability", plan.probabilities[w]},
         {"cost", RoundMilli(plan.ScenarioCost(instance, static_cast<int>(w)))},
         {"routes", RoutesJson(instance, plan.truck_ids, plan.routes[w])}});
  }
  doc["scenarios"] = scenarios;
  return doc;
}

nlohmann::json SimulationJson(const Instance& instance,
                              const SimulationResult& result) {
  json doc;
  doc["kind"] = "simulation";
  doc["instance"] = result.instance_name;
  doc["realizedScenario"] = result.realized_scenario;
  json epochs = json::array();
  for (const EpochRecord& e : result.epochs) {
    json loads = json::array();
    for (double l : e.loads) loads.push_back(RoundMilli(l));
    json rec = {{"iteration", e.iteration},
                {"epoch", e.epoch},
                {"failed", e.failed},
                {"triggerTruck", e.trigger_truck},
                {"triggerStop", e.trigger_stop},
                {"origins", e.origins},
                {"loads", loads},
                {"startingWeight", RoundMilli(e.starting_weight)},
                {"scenario", e.scenario},
                {"routes", RoutesJson(instance, e.truck_ids, e.routes)},
                {"outsourced", e.outsourced},
                {"status", milp::ToString(e.status)},
                {"servedCount", e.served_count}};
    if (e.failed) {
      rec["failure"] = e.failure;
    } else {
      rec["objective"] = RoundMilli(e.objective);
      rec["distance"] = RoundMilli(e.distance);
      rec["gap"] = e.gap;
      rec["nodes"] = e.node_count;
    }
    epochs.push_back(rec);
  }
  doc["epochs"] = epochs;
  json routes = json::array();
  for (std::size_t t = 0; t < result.actual_routes.size(); ++t) {
    json trips = json::array();
    for (double l : result.trip_loads[t]) trips.push_back(RoundMilli(l));
    routes.push_back(
        {{"truck", result.truck_ids[t]},
         {"stops", result.actual_routes[t]},
         {"distance", RoundMilli(WalkDistance(instance, result.actual_routes[t]))},
         {"tripLoads", trips}});
  }
  doc["actual"] = {{"routes", routes},
                   {"outsourced", result.outsourced},
                   {"distance", RoundMilli(result.total_distance)},
                   {"deliveryCost", RoundMilli(result.delivery_cost)},
                   {"totalCost", RoundMilli(result.total_cost)}};
  return doc;
}

nlohmann::json ParseResultJson(const std::string& text) {
  json doc = Parse(text);
  if (!doc.is_object()) Fail("", "expected an object");
  const std::string kind = String(Required(doc, "", "kind"), "kind");
  if (kind == "plan") {
    Required(doc, "", "scenarios");
    Required(doc, "", "objective");
  } else if (kind == "simulation") {
    Required(doc, "", "epochs");
    Required(doc, "", "actual");
  } else if (kind == "experiment") {
    Required(doc, "", "series");
  } else {
    Fail("kind", "unknown result kind");
  }
  return doc;
}

std::string DumpJson(const nlohmann::json& document) {
  return document.dump(2) + "\n";
}

std::string FormatMilli(double value, bool trim) {
  const long long milli = ToMilli(value);
  const long long whole = (milli < 0 ? -milli : milli) / 1000;
  const long long frac = (milli < 0 ? -milli : milli) % 1000;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s%lld.%03lld", milli < 0 ? "-" : "", whole,
                frac);
  std::string out = buf;
  if (trim) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

std::string RouteText(const std::vector<std::vector<LocationId>>& routes) {
  std::string out;
  for (const auto& route : routes) {
    if (route.empty()) continue;
    if (!out.empty()) out += "|";
    for (std::size_t i = 0; i < route.size(); ++i) {
      if (i > 0) out += "-";
      out += Stop(route[i]);
    }
  }
  return out;
}

std::string PlanCsv(const Instance& instance, const Plan& plan) {
  std::string out = std::string(kTraceCsvHeader) + "\n";
  for (std::size_t w = 0; w < plan.routes.size(); ++w) {
    double preload = 0.0;
    const int wi = instance.scenarios.IndexOf(plan.scenario_ids[w]);
    for (const auto& route : plan.routes[w]) {
      for (LocationId c : route) {
        if (c != kDepot && wi >= 0) preload += std::max(0.0, -instance.Size(c, wi));
      }
    }
    double distance = 0.0;
    for (const auto& route : plan.routes[w]) distance += WalkDistance(instance, route);
    out += "1," + FormatMilli(preload, true) + "," + CsvField(plan.scenario_ids[w]) +
           "," + CsvField(RouteText(plan.routes[w])) + "," +
           CsvField(OutsourcedText(plan.outsourced)) + "," +
           FormatMilli(plan.ScenarioCost(instance, static_cast<int>(w)), false) +
           "," + FormatMilli(distance, true) + "\n";
  }
  return out;
}

std::string SimulationCsv(const SimulationResult& result) {
  std::string out = std::string(kTraceCsvHeader) + "\n";
  for (const EpochRecord& e : result.epochs) {
    out += std::to_string(e.iteration) + "," + FormatMilli(e.starting_weight, true) +
           "," + CsvField(e.scenario) + "," + CsvField(RouteText(e.routes)) + "," +
           CsvField(OutsourcedText(e.outsourced)) + "," +
           (e.failed ? std::string() : FormatMilli(e.objective, false)) + "," +
           (e.failed ? std::string() : FormatMilli(e.distance, true)) + "\n";
  }
  const double start =
      result.epochs.empty() ? 0.0 : result.epochs.front().starting_weight;
  out += "actual," + FormatMilli(start, true) + "," +
         CsvField(result.realized_scenario) + "," +
         CsvField(RouteText(result.actual_routes)) + "," +
         CsvField(OutsourcedText(result.outsourced)) + "," +
         FormatMilli(result.total_cost, false) + "," +
         FormatMilli(result.total_distance, true) + "\n";
  return out;
}

}  // namespace pdpsd
