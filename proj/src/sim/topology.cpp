#include "mlochan/sim/topology.hpp"

#include <cmath>
#include <stdexcept>

#include "mlochan/common/rng.hpp"

namespace mlochan::sim {

double distance_m(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

int Topology::walls(NodeRef a, NodeRef b) const {
  auto key = a < b ? std::pair(a, b) : std::pair(b, a);
  auto it = walls_between.find(key);
  return it == walls_between.end() ? default_walls : it->second;
}

void Topology::set_walls(NodeRef a, NodeRef b, int w) {
  if (w < 0) throw std::invalid_argument("wall count must be nonnegative");
  auto key = a < b ? std::pair(a, b) : std::pair(b, a);
  walls_between[key] = w;
}

std::vector<std::vector<int>> Topology::stations_by_ap() const {
  std::vector<std::vector<int>> out(aps.size());
  for (int i = 0; i < static_cast<int>(stations.size()); ++i) {
    out.at(stations[i].serving_ap_id).push_back(i);
  }
  return out;
}

Topology generate_topology(const TopologyConfig& config, std::uint64_t seed) {
  if (config.num_aps < 1)
    throw std::invalid_argument("generate_topology: need at least one AP");
  if (!(config.area_side_m > 0.0))
    throw std::invalid_argument("generate_topology: area side must be positive");
  if (config.stations_min < 1 || config.stations_max < config.stations_min)
    throw std::invalid_argument("generate_topology: invalid station count range");
  if (config.default_walls < 0)
    throw std::invalid_argument("generate_topology: wall count must be nonnegative");

  Rng rng(derive_seed(seed, "topology"));
  Topology topo;
  topo.area_side_m = config.area_side_m;
  topo.seed = seed;
  topo.default_walls = config.default_walls;

  for (int a = 0; a < config.num_aps; ++a) {
    AccessPoint ap;
    ap.ap_id = a;
    ap.pos.x = rng.uniform(0.0, config.area_side_m);
    ap.pos.y = rng.uniform(0.0, config.area_side_m);
    topo.aps.push_back(ap);
  }

  constexpr double kTwoPi = 2.0 * 3.141592653589793238462643383279502884;
  int next_sta = 0;
  for (int a = 0; a < config.num_aps; ++a) {
    const int count = static_cast<int>(
        rng.uniform_int(config.stations_min, config.stations_max));
    const int near_count = static_cast<int>(std::lround(0.2 * count));
    for (int s = 0; s < count; ++s) {
      const bool near = s < near_count;
      const double radius = near ? rng.uniform(1.0, 3.0) : rng.uniform(1.0, 8.0);
      const double angle = rng.uniform(0.0, kTwoPi);
      Station sta;
      sta.sta_id = next_sta++;
      sta.serving_ap_id = a;
      sta.pos.x = topo.aps[a].pos.x + radius * std::cos(angle);
      sta.pos.y = topo.aps[a].pos.y + radius * std::sin(angle);
      topo.stations.push_back(sta);
    }
  }
  return topo;
}

}  // namespace mlochan::sim
