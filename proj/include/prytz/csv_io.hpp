#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "prytz/development.hpp"
#include "prytz/geodesic.hpp"
#include "prytz/planimeter.hpp"

namespace prytz {

// 17 significant digits: round-trips doubles exactly and keeps outputs
// byte-identical across runs.
std::string format_double(double v);

// Header `t,px,py,qx,qy,theta`, one row per sample.
void write_planimeter_csv(std::ostream& os, const PlanimeterPath& path);

// Header `t,x,y,theta,px,py,ptheta,H`.
void write_trajectory_csv(std::ostream& os,
                          const std::vector<GeodesicSample>& traj);

// Header `t,u0x,u0y,theta1,u1x,u1y,...,thetan,unx,uny`.
void write_chain_csv(std::ostream& os, const ChainPath& path);

}  // namespace prytz
