#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "prytz/scenario.hpp"

namespace prytz {

// Command drivers. Reports go to `out`; CSV/JSON artifacts are written into
// `outdir` when given. All outputs are deterministic for a fixed scenario.
void cmd_area(const AreaScenario& s, std::ostream& out,
              const std::optional<std::string>& outdir);
void cmd_holonomy(const HolonomyScenario& s, std::ostream& out,
                  const std::optional<std::string>& outdir);
void cmd_sweep(const SweepScenario& s, std::ostream& out,
               const std::optional<std::string>& outdir);
void cmd_geodesic(const GeodesicScenario& s, std::ostream& out,
                  const std::optional<std::string>& outdir);
void cmd_plan(const PlanScenario& s, std::ostream& out,
              const std::optional<std::string>& outdir);
void cmd_chain(const ChainScenario& s, std::ostream& out,
               const std::optional<std::string>& outdir);
void cmd_figures(std::ostream& out, const std::string& outdir);

// Full argument-list entry point (without the program name).
// Exit codes: 0 success, 2 usage or scenario error, 3 numeric failure,
// 4 planner non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace prytz
