#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prytz/curve.hpp"
#include "prytz/geodesic.hpp"
#include "prytz/planimeter.hpp"

namespace prytz {

// Malformed or unknown scenario content; the message names the offending key.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// Builds a curve from its JSON spec. Kinds and keys (see README for the
// full schema): circle, star, polygon, segment, composite, reversed.
// Unknown keys are rejected.
Curve::Ptr curve_from_json(const json& spec);

json load_json_file(const std::string& path);

// Default step count: the scenario value if present, else the PRYTZ_STEPS
// environment variable, else `fallback`.
std::size_t resolve_steps(const json& doc, std::size_t fallback);

struct AreaScenario {
  json doc;
  Curve::Ptr boundary;
  double l = 5.0;
  std::optional<double> theta0;  // absent: rod along the outward segment
  std::optional<Vec2> start;     // absent: centroid
  std::size_t steps = 100000;
  std::size_t samples = 4096;
};
AreaScenario parse_area_scenario(const json& doc);

struct HolonomyScenario {
  json doc;
  Curve::Ptr curve;
  double l = 5.0;
  std::size_t steps = 100000;
  std::size_t theta0_count = 16;
};
HolonomyScenario parse_holonomy_scenario(const json& doc);

struct SweepScenario {
  json doc;
  Curve::Ptr boundary;  // region with centroid at the origin
  std::vector<double> l_values;
  std::size_t steps = 100000;
  double theta0 = 0.0;
};
SweepScenario parse_sweep_scenario(const json& doc);

struct GeodesicScenario {
  json doc;
  CotangentState initial;
  double T = 10.0;
  std::size_t steps = 100000;
};
GeodesicScenario parse_geodesic_scenario(const json& doc);

struct PlanScenario {
  json doc;
  Config from;
  Config to;
  double tol = 1e-6;
  std::size_t max_loops = 20;
  std::size_t loop_steps = 8192;
};
PlanScenario parse_plan_scenario(const json& doc);

struct ChainScenario {
  json doc;
  Curve::Ptr curve;
  std::vector<double> lengths;
  std::vector<double> theta0;
  std::size_t steps = 100000;
};
ChainScenario parse_chain_scenario(const json& doc);

}  // namespace prytz
