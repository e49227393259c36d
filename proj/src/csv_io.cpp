#include "prytz/csv_io.hpp"

#include <cstdio>

namespace prytz {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_planimeter_csv(std::ostream& os, const PlanimeterPath& path) {
  os << "t,px,py,qx,qy,theta\n";
  for (std::size_t i = 0; i < path.size(); ++i) {
    const PathSample& s = path[i];
    const Vec2 q = path.chisel_at(i);
    os << format_double(s.t) << ',' << format_double(s.pos.x) << ','
       << format_double(s.pos.y) << ',' << format_double(q.x) << ','
       << format_double(q.y) << ',' << format_double(s.theta) << '\n';
  }
}

void write_trajectory_csv(std::ostream& os,
                          const std::vector<GeodesicSample>& traj) {
  os << "t,x,y,theta,px,py,ptheta,H\n";
  for (const GeodesicSample& g : traj) {
    const CotangentState& s = g.state;
    os << format_double(g.t) << ',' << format_double(s.x) << ','
       << format_double(s.y) << ',' << format_double(s.theta) << ','
       << format_double(s.px) << ',' << format_double(s.py) << ','
       << format_double(s.ptheta) << ',' << format_double(hamiltonian(s))
       << '\n';
  }
}

void write_chain_csv(std::ostream& os, const ChainPath& path) {
  os << "t,u0x,u0y";
  for (std::size_t i = 1; i <= path.links(); ++i)
    os << ",theta" << i << ",u" << i << "x,u" << i << "y";
  os << '\n';
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Vec2 u0 = path.joint_at(0, k);
    os << format_double(path.time_at(k)) << ',' << format_double(u0.x) << ','
       << format_double(u0.y);
    for (std::size_t i = 1; i <= path.links(); ++i) {
      const Vec2 u = path.joint_at(i, k);
      os << ',' << format_double(path.angle_at(i, k)) << ','
         << format_double(u.x) << ',' << format_double(u.y);
    }
    os << '\n';
  }
}

}  // namespace prytz
