#include "prytz/scenario.hpp"

#include <cstdlib>
#include <fstream>

namespace prytz {

namespace {

void check_keys(const json& obj, const char* ctx,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
  if (!obj.is_object())
    throw ScenarioError(std::string(ctx) + ": expected a JSON object");
  for (const char* k : required)
    if (!obj.contains(k))
      throw ScenarioError(std::string(ctx) + ": missing key \"" + k + "\"");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : required) known = known || it.key() == k;
    for (const char* k : optional) known = known || it.key() == k;
    if (!known)
      throw ScenarioError(std::string(ctx) + ": unknown key \"" + it.key() + "\"");
  }
}

double get_number(const json& obj, const char* ctx, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number())
    throw ScenarioError(std::string(ctx) + ": key \"" + key + "\" must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d))
    throw ScenarioError(std::string(ctx) + ": key \"" + key + "\" must be finite");
  return d;
}

double get_number_or(const json& obj, const char* ctx, const char* key,
                     double fallback) {
  return obj.contains(key) ? get_number(obj, ctx, key) : fallback;
}

Vec2 get_vec2(const json& v, const char* ctx, const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ScenarioError(std::string(ctx) + ": key \"" + key +
                        "\" must be a [x, y] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

std::size_t get_count(const json& obj, const char* ctx, const char* key,
                      std::size_t fallback, bool allow_zero = false) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  const bool integral = v.is_number_integer() || v.is_number_unsigned();
  if (!integral || v.get<long long>() < (allow_zero ? 0 : 1))
    throw ScenarioError(std::string(ctx) + ": key \"" + key +
                        "\" must be a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

Curve::Ptr curve_from_json(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw ScenarioError("curve: missing key \"kind\"");
  const std::string kind = spec.at("kind").get<std::string>();

  if (kind == "circle") {
    check_keys(spec, "circle", {"kind", "center", "radius"},
               {"ccw", "phase", "duration"});
    const Vec2 c = get_vec2(spec.at("center"), "circle", "center");
    const double r = get_number(spec, "circle", "radius");
    const bool ccw = spec.value("ccw", true);
    const double phase = get_number_or(spec, "circle", "phase", 0.0);
    const double dur = get_number_or(spec, "circle", "duration", 1.0);
    return make_circle(c, r, ccw, phase, dur);
  }
  if (kind == "star") {
    check_keys(spec, "star",
               {"kind", "center", "points", "outer_radius", "inner_radius"},
               {"duration"});
    const Vec2 c = get_vec2(spec.at("center"), "star", "center");
    const int n = spec.at("points").get<int>();
    const double ro = get_number(spec, "star", "outer_radius");
    const double ri = get_number(spec, "star", "inner_radius");
    const double dur = get_number_or(spec, "star", "duration", 1.0);
    return make_star(c, n, ro, ri, dur);
  }
  if (kind == "polygon") {
    check_keys(spec, "polygon", {"kind", "vertices"}, {"duration"});
    const auto& vs = spec.at("vertices");
    if (!vs.is_array() || vs.size() < 3)
      throw ScenarioError("polygon: key \"vertices\" must list at least three points");
    std::vector<Vec2> pts;
    pts.reserve(vs.size());
    for (const auto& v : vs) pts.push_back(get_vec2(v, "polygon", "vertices"));
    return make_polygon(std::move(pts),
                        get_number_or(spec, "polygon", "duration", 1.0));
  }
  if (kind == "segment") {
    check_keys(spec, "segment", {"kind", "from", "to"}, {"duration"});
    return make_segment(get_vec2(spec.at("from"), "segment", "from"),
                        get_vec2(spec.at("to"), "segment", "to"),
                        get_number_or(spec, "segment", "duration", 1.0));
  }
  if (kind == "composite") {
    check_keys(spec, "composite", {"kind", "children"}, {"duration"});
    const auto& cs = spec.at("children");
    if (!cs.is_array() || cs.empty())
      throw ScenarioError("composite: key \"children\" must be a non-empty array");
    std::vector<Curve::Ptr> children;
    children.reserve(cs.size());
    for (const auto& c : cs) children.push_back(curve_from_json(c));
    return make_composite(std::move(children),
                          get_number_or(spec, "composite", "duration", 1.0));
  }
  if (kind == "reversed") {
    check_keys(spec, "reversed", {"kind", "child"}, {});
    return make_reversed(curve_from_json(spec.at("child")));
  }
  throw ScenarioError("curve: unknown kind \"" + kind + "\"");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("scenario: cannot open \"" + path + "\"");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ScenarioError("scenario: invalid JSON in \"" + path + "\": " + e.what());
  }
  return doc;
}

std::size_t resolve_steps(const json& doc, std::size_t fallback) {
  if (doc.contains("steps")) return get_count(doc, "scenario", "steps", fallback);
  if (const char* env = std::getenv("PRYTZ_STEPS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ScenarioError("PRYTZ_STEPS: must be a positive integer");
  }
  return fallback;
}

AreaScenario parse_area_scenario(const json& doc) {
  check_keys(doc, "area scenario", {"curve", "l"},
             {"theta0", "start", "steps", "samples", "out"});
  AreaScenario s;
  s.doc = doc;
  s.boundary = curve_from_json(doc.at("curve"));
  s.l = get_number(doc, "area scenario", "l");
  if (doc.contains("theta0"))
    s.theta0 = get_number(doc, "area scenario", "theta0");
  if (doc.contains("start")) {
    const auto& st = doc.at("start");
    if (st.is_string() && st.get<std::string>() == "centroid") {
      // default
    } else {
      s.start = get_vec2(st, "area scenario", "start");
    }
  }
  s.steps = resolve_steps(doc, 100000);
  s.samples = get_count(doc, "area scenario", "samples", 4096);
  return s;
}

HolonomyScenario parse_holonomy_scenario(const json& doc) {
  check_keys(doc, "holonomy scenario", {"curve", "l"},
             {"steps", "theta0_count", "out"});
  HolonomyScenario s;
  s.doc = doc;
  s.curve = curve_from_json(doc.at("curve"));
  s.l = get_number(doc, "holonomy scenario", "l");
  s.steps = resolve_steps(doc, 100000);
  s.theta0_count = get_count(doc, "holonomy scenario", "theta0_count", 16);
  return s;
}

SweepScenario parse_sweep_scenario(const json& doc) {
  check_keys(doc, "sweep scenario", {"curve", "l_list"},
             {"steps", "theta0", "out"});
  SweepScenario s;
  s.doc = doc;
  s.boundary = curve_from_json(doc.at("curve"));
  const auto& ls = doc.at("l_list");
  if (!ls.is_array() || ls.size() < 2)
    throw ScenarioError("sweep scenario: key \"l_list\" must list at least two lengths");
  for (const auto& v : ls) {
    if (!v.is_number() || !(v.get<double>() > 0.0))
      throw ScenarioError("sweep scenario: key \"l_list\" entries must be positive numbers");
    s.l_values.push_back(v.get<double>());
  }
  s.steps = resolve_steps(doc, 100000);
  s.theta0 = get_number_or(doc, "sweep scenario", "theta0", 0.0);
  return s;
}

GeodesicScenario parse_geodesic_scenario(const json& doc) {
  check_keys(doc, "geodesic scenario", {"initial", "l", "T"}, {"steps", "out"});
  const auto& init = doc.at("initial");
  check_keys(init, "geodesic initial state", {"x", "y", "theta", "px", "py", "ptheta"}, {});
  GeodesicScenario s;
  s.doc = doc;
  s.initial = {get_number(init, "initial", "x"),
               get_number(init, "initial", "y"),
               get_number(init, "initial", "theta"),
               get_number(init, "initial", "px"),
               get_number(init, "initial", "py"),
               get_number(init, "initial", "ptheta"),
               get_number(doc, "geodesic scenario", "l")};
  s.T = get_number(doc, "geodesic scenario", "T");
  s.steps = resolve_steps(doc, 100000);
  return s;
}

PlanScenario parse_plan_scenario(const json& doc) {
  check_keys(doc, "plan scenario", {"from", "to", "l"},
             {"tol", "max_loops", "loop_steps", "out"});
  auto parse_config = [&](const char* key, double l) {
    const auto& c = doc.at(key);
    check_keys(c, key, {"x", "y", "theta"}, {});
    return Config{get_number(c, key, "x"), get_number(c, key, "y"),
                  get_number(c, key, "theta"), l};
  };
  PlanScenario s;
  s.doc = doc;
  const double l = get_number(doc, "plan scenario", "l");
  s.from = parse_config("from", l);
  s.to = parse_config("to", l);
  s.tol = get_number_or(doc, "plan scenario", "tol", 1e-6);
  if (!(s.tol > 0.0))
    throw ScenarioError("plan scenario: key \"tol\" must be positive");
  s.max_loops = get_count(doc, "plan scenario", "max_loops", 20, true);
  s.loop_steps = get_count(doc, "plan scenario", "loop_steps", 8192);
  return s;
}

ChainScenario parse_chain_scenario(const json& doc) {
  check_keys(doc, "chain scenario", {"curve", "links"}, {"steps", "out"});
  ChainScenario s;
  s.doc = doc;
  s.curve = curve_from_json(doc.at("curve"));
  const auto& links = doc.at("links");
  if (!links.is_array() || links.empty())
    throw ScenarioError("chain scenario: key \"links\" must be a non-empty array");
  for (const auto& link : links) {
    check_keys(link, "chain link", {"l", "theta0"}, {});
    const double l = get_number(link, "chain link", "l");
    if (!(l > 0.0))
      throw ScenarioError("chain link: key \"l\" must be positive");
    s.lengths.push_back(l);
    s.theta0.push_back(get_number(link, "chain link", "theta0"));
  }
  s.steps = resolve_steps(doc, 100000);
  return s;
}

}  // namespace prytz
