#include "prytz/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <CLI11.hpp>

#include "prytz/csv_io.hpp"
#include "prytz/errors.hpp"
#include "prytz/holonomy.hpp"
#include "prytz/moments.hpp"
#include "prytz/planner.hpp"

namespace prytz {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::ofstream open_artifact(const std::string& outdir, const std::string& name) {
  std::filesystem::create_directories(outdir);
  const auto p = std::filesystem::path(outdir) / name;
  std::ofstream f(p);
  if (!f) throw ScenarioError("cannot write \"" + p.string() + "\"");
  return f;
}

double outward_theta0(const Curve& boundary, Vec2 start) {
  const Vec2 dir = boundary.position(0.0) - start;
  if (dir.x == 0.0 && dir.y == 0.0) return 0.0;
  return std::atan2(dir.y, dir.x);
}

json su11_to_json(const SU11Vector& v) {
  return json::array({v.c1(), v.c2(), v.c3()});
}

// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

void cmd_area(const AreaScenario& s, std::ostream& out,
              const std::optional<std::string>& outdir) {
  const Vec2 start = s.start ? *s.start : centroid(*s.boundary, s.samples);
  const auto loop = prytz_loop(s.boundary, start);
  const double theta0 = s.theta0 ? *s.theta0 : outward_theta0(*s.boundary, start);

  const PlanimeterPath path = lift(loop, theta0, s.l, s.steps);
  const Moments m = moments(*loop, s.samples);
  const double dth = delta_theta(path);
  const double a_angle = area_estimate_angle(path);
  const double a_chord = area_estimate_chord(path);
  const double a_q = chisel_closure_area(path);

  out << "start = " << format_double(start.x) << ' ' << format_double(start.y)
      << "\ntheta0 = " << format_double(theta0)
      << "\narea_moments = " << format_double(m.area)
      << "\ndelta_theta = " << format_double(dth)
      << "\narea_angle = " << format_double(a_angle)
      << "\narea_chord = " << format_double(a_chord)
      << "\nchisel_closure_area = " << format_double(a_q)
      << "\nidentity_residual = " << format_double(m.area - (a_angle + a_q))
      << '\n';

  if (outdir) {
    auto f = open_artifact(*outdir, "area_path.csv");
    write_planimeter_csv(f, path);
  }
}

void cmd_holonomy(const HolonomyScenario& s, std::ostream& out,
                  const std::optional<std::string>& outdir) {
  const PSU11Element g = holonomy(*s.curve, s.l, s.steps);
  const Moments m = moments(*s.curve);
  const Vec2 base = s.curve->position(0.0);
  const MagnusTerms terms = magnus_terms(shift_moments(m, base), s.l);
  const SU11Vector u1 = magnus_u1(*s.curve, s.l);

  out << "a = " << format_double(g.a.real()) << ' ' << format_double(g.a.imag())
      << "\nb = " << format_double(g.b.real()) << ' '
      << format_double(g.b.imag()) << '\n';
  out << "U1 = " << format_double(u1.c1()) << ' ' << format_double(u1.c2())
      << ' ' << format_double(u1.c3()) << '\n';
  out << "U2 = " << format_double(terms.u2.c1()) << ' '
      << format_double(terms.u2.c2()) << ' ' << format_double(terms.u2.c3())
      << '\n';
  out << "U3 = " << format_double(terms.u3.c1()) << ' '
      << format_double(terms.u3.c2()) << ' ' << format_double(terms.u3.c3())
      << '\n';
  out << "U4 = " << format_double(terms.u4.c1()) << ' '
      << format_double(terms.u4.c2()) << ' ' << format_double(terms.u4.c3())
      << '\n';

  json report;
  report["a"] = {g.a.real(), g.a.imag()};
  report["b"] = {g.b.real(), g.b.imag()};
  report["magnus"] = {{"U1", su11_to_json(u1)},
                      {"U2", su11_to_json(terms.u2)},
                      {"U3", su11_to_json(terms.u3)},
                      {"U4", su11_to_json(terms.u4)}};
  report["delta_theta_at"] = json::array();

  out << "theta0 dtheta_group dtheta_lift dtheta_magnus\n";
  double max_mismatch = 0.0;
  for (std::size_t k = 0; k < s.theta0_count; ++k) {
    const double theta0 = kTau * static_cast<double>(k) /
                          static_cast<double>(s.theta0_count);
    const double d_group = act(g, theta0) - theta0;
    const double d_lift = delta_theta(lift(s.curve, theta0, s.l, s.steps));
    const double d_magnus = predicted_delta_theta(terms, theta0);
    max_mismatch = std::max(max_mismatch, std::abs(d_group - d_lift));
    out << format_double(theta0) << ' ' << format_double(d_group) << ' '
        << format_double(d_lift) << ' ' << format_double(d_magnus) << '\n';
    report["delta_theta_at"].push_back({{"theta0", theta0},
                                        {"dtheta", d_group},
                                        {"dtheta_lift", d_lift},
                                        {"dtheta_magnus", d_magnus}});
  }
  out << "max_group_vs_lift = " << format_double(max_mismatch) << '\n';

  if (outdir) {
    auto f = open_artifact(*outdir, "holonomy.json");
    f << report.dump(2) << '\n';
  }
}

void cmd_sweep(const SweepScenario& s, std::ostream& out,
               const std::optional<std::string>& outdir) {
  const Vec2 start = centroid(*s.boundary);
  const auto loop = prytz_loop(s.boundary, start);
  const Moments m = moments(*loop);

  std::vector<double> ls = s.l_values;
  std::vector<double> chord_gap(ls.size()), angle_area_gap(ls.size()),
      magnus_residual(ls.size());

  std::string csv = "l,chord_angle_gap,angle_area_gap,magnus_residual\n";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const double l = ls[i];
    const PlanimeterPath path = lift(loop, s.theta0, l, s.steps);
    const double dth = delta_theta(path);
    const double a_angle = l * l * dth;
    const double a_chord = area_estimate_chord(path);
    const MagnusTerms terms = magnus_terms(shift_moments(m, start), l);
    chord_gap[i] = std::abs(a_chord - a_angle);
    angle_area_gap[i] = std::abs(a_angle - m.area);
    magnus_residual[i] = std::abs(dth - predicted_delta_theta(terms, s.theta0));
    csv += format_double(l) + ',' + format_double(chord_gap[i]) + ',' +
           format_double(angle_area_gap[i]) + ',' +
           format_double(magnus_residual[i]) + '\n';
  }

  out << csv;
  out << "slope_chord_angle_gap = " << format_double(loglog_slope(ls, chord_gap))
      << '\n'
      << "slope_angle_area_gap = "
      << format_double(loglog_slope(ls, angle_area_gap)) << '\n'
      << "slope_magnus_residual = "
      << format_double(loglog_slope(ls, magnus_residual)) << '\n';

  if (outdir) {
    auto f = open_artifact(*outdir, "sweep.csv");
    f << csv;
  }
}

void cmd_geodesic(const GeodesicScenario& s, std::ostream& out,
                  const std::optional<std::string>& outdir) {
  const auto traj = geodesic(s.initial, s.T, s.steps);
  const double h0 = hamiltonian(traj.front().state);
  double drift = 0.0;
  for (const auto& g : traj)
    drift = std::max(drift, std::abs(hamiltonian(g.state) - h0));
  out << "H0 = " << format_double(h0) << '\n'
      << "max_H_drift = " << format_double(drift) << '\n'
      << "final_theta = " << format_double(traj.back().state.theta) << '\n';
  if (outdir) {
    auto f = open_artifact(*outdir, "geodesic.csv");
    write_trajectory_csv(f, traj);
  }
}

void cmd_plan(const PlanScenario& s, std::ostream& out,
              const std::optional<std::string>& outdir) {
  const PlanResult res = plan(s.from, s.to, s.tol, s.max_loops, s.loop_steps);

  json curves = json::array();
  if (norm(s.to.pos() - s.from.pos()) > 0.0)
    curves.push_back({{"kind", "segment"},
                      {"from", {s.from.x, s.from.y}},
                      {"to", {s.to.x, s.to.y}}});
  json loops = json::array();
  for (const PlannerLoop& lp : res.loops) {
    curves.push_back({{"kind", "circle"},
                      {"center", {s.to.x + lp.radius, s.to.y}},
                      {"radius", lp.radius},
                      {"ccw", lp.ccw},
                      {"phase", std::numbers::pi}});
    loops.push_back({{"radius", lp.radius}, {"ccw", lp.ccw}, {"dtheta", lp.dtheta}});
  }
  json report = {{"curves", curves},
                 {"loops", loops},
                 {"final", {{"x", res.final_config.x},
                            {"y", res.final_config.y},
                            {"theta", res.final_config.theta}}},
                 {"residual", res.residual},
                 {"initial_radius_guess", res.initial_radius_guess}};

  out << "loops = " << res.loops.size() << '\n'
      << "initial_radius_guess = " << format_double(res.initial_radius_guess)
      << '\n'
      << "residual = " << format_double(res.residual) << '\n'
      << "final_theta = " << format_double(res.final_config.theta) << '\n';

  if (outdir) {
    auto f = open_artifact(*outdir, "plan.json");
    f << report.dump(2) << '\n';
  }
}

void cmd_chain(const ChainScenario& s, std::ostream& out,
               const std::optional<std::string>& outdir) {
  const ChainPath path =
      chain_lift(s.curve, {s.lengths, s.theta0}, s.steps);
  out << "links = " << path.links() << '\n';
  for (std::size_t i = 1; i <= path.links(); ++i)
    out << "final_theta" << i << " = "
        << format_double(path.angle_at(i, path.size() - 1)) << '\n';
  if (outdir) {
    auto f = open_artifact(*outdir, "chain.csv");
    write_chain_csv(f, path);
  }
}

void cmd_figures(std::ostream& out, const std::string& outdir) {
  const std::size_t steps = resolve_steps(json::object(), 100000);
  const double l = 5.0;

  const auto circle = make_circle({0.0, 0.0}, 1.0);
  const auto star = make_star({0.0, 0.0}, 5, 1.0, 0.4);

  auto emit_lift = [&](const Curve::Ptr& curve, double theta0,
                       const std::string& name) {
    auto f = open_artifact(outdir, name);
    write_planimeter_csv(f, lift(curve, theta0, l, steps));
    out << name << '\n';
  };
  emit_lift(prytz_loop(circle, {0.0, 0.0}), 0.0, "circle_loop.csv");
  emit_lift(circle, 0.0, "circle_direct.csv");
  emit_lift(prytz_loop(star, {0.0, 0.0}), 0.0, "star_loop.csv");
  emit_lift(star, 0.0, "star_direct.csv");

  auto emit_geodesic = [&](const CotangentState& s0, double T,
                           const std::string& name) {
    const auto traj = geodesic(s0, T, steps);
    auto f = open_artifact(outdir, name);
    f << "t,px,py,qx,qy,theta\n";
    for (const auto& g : traj) {
      const CotangentState& st = g.state;
      const Config c{st.x, st.y, st.theta, st.l};
      const Vec2 q = c.chisel();
      f << format_double(g.t) << ',' << format_double(st.x) << ','
        << format_double(st.y) << ',' << format_double(q.x) << ','
        << format_double(q.y) << ',' << format_double(st.theta) << '\n';
    }
    out << name << '\n';
  };
  emit_geodesic({0.0, 0.0, 0.0, 1.0, 0.0, 0.6, 1.0}, 20.0, "geodesic_a.csv");
  emit_geodesic({0.0, 0.0, 0.5, 0.8, 0.4, -0.9, 1.0}, 20.0, "geodesic_b.csv");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Prytz planimeter simulation toolkit"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd = nullptr;
    std::string scenario;
    std::string outdir;
  };
  auto add = [&](const char* name, const char* desc, bool needs_scenario) {
    Sub s;
    s.cmd = app.add_subcommand(name, desc);
    auto* opt = s.cmd->add_option("--scenario", s.scenario, "scenario JSON file");
    if (needs_scenario) opt->required();
    s.cmd->add_option("--out", s.outdir, "output directory for CSV/JSON artifacts");
    return s;
  };

  Sub area = add("area", "lift a boundary loop and report area estimates", true);
  Sub holo = add("holonomy", "group holonomy vs lift vs Magnus prediction", true);
  Sub sweep = add("sweep", "residual scaling against the rod length", true);
  Sub geo = add("geodesic", "integrate a normal geodesic", true);
  Sub planc = add("plan", "steer between configurations", true);
  Sub chain = add("chain", "lift a trailer chain", true);
  Sub figs = add("figures", "regenerate the bundled figure data", false);
  figs.cmd->get_option("--out")->required();

  std::vector<const char*> argv;
  argv.push_back("prytz");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  auto outdir_of = [](const Sub& s) -> std::optional<std::string> {
    return s.outdir.empty() ? std::nullopt : std::make_optional(s.outdir);
  };

  try {
    if (area.cmd->parsed())
      cmd_area(parse_area_scenario(load_json_file(area.scenario)), out,
               outdir_of(area));
    else if (holo.cmd->parsed())
      cmd_holonomy(parse_holonomy_scenario(load_json_file(holo.scenario)), out,
                   outdir_of(holo));
    else if (sweep.cmd->parsed())
      cmd_sweep(parse_sweep_scenario(load_json_file(sweep.scenario)), out,
                outdir_of(sweep));
    else if (geo.cmd->parsed())
      cmd_geodesic(parse_geodesic_scenario(load_json_file(geo.scenario)), out,
                   outdir_of(geo));
    else if (planc.cmd->parsed())
      cmd_plan(parse_plan_scenario(load_json_file(planc.scenario)), out,
               outdir_of(planc));
    else if (chain.cmd->parsed())
      cmd_chain(parse_chain_scenario(load_json_file(chain.scenario)), out,
                outdir_of(chain));
    else if (figs.cmd->parsed())
      cmd_figures(out, figs.outdir);
  } catch (const PlannerConvergenceError& e) {
    err << "planner error: " << e.what()
        << " (best residual = " << format_double(e.best.residual) << ")\n";
    return 4;
  } catch (const ScenarioError& e) {
    err << "scenario error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "scenario error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "scenario error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace prytz
