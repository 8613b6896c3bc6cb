#ifndef MLOCHAN_SIM_TOPOLOGY_HPP
#define MLOCHAN_SIM_TOPOLOGY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mlochan::sim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double distance_m(const Vec2& a, const Vec2& b);

struct AccessPoint {
  int ap_id = 0;
  Vec2 pos;
};

struct Station {
  int sta_id = 0;
  int serving_ap_id = 0;
  Vec2 pos;
};

/// Node handle for wall lookups: kind 0 = AP, kind 1 = station.
struct NodeRef {
  enum Kind { Ap = 0, Sta = 1 };
  Kind kind = Ap;
  int id = 0;
  friend bool operator<(const NodeRef& a, const NodeRef& b) {
    return std::pair(static_cast<int>(a.kind), a.id) <
           std::pair(static_cast<int>(b.kind), b.id);
  }
  friend bool operator==(const NodeRef& a, const NodeRef& b) {
    return a.kind == b.kind && a.id == b.id;
  }
};

struct Topology {
  std::vector<AccessPoint> aps;
  std::vector<Station> stations;
  double area_side_m = 40.0;
  std::uint64_t seed = 0;
  int default_walls = 0;
  /// Per-link overrides; key is stored with the smaller NodeRef first.
  std::map<std::pair<NodeRef, NodeRef>, int> walls_between;

  int walls(NodeRef a, NodeRef b) const;
  void set_walls(NodeRef a, NodeRef b, int w);

  /// Station indices (into `stations`) grouped by serving AP.
  std::vector<std::vector<int>> stations_by_ap() const;
};

struct TopologyConfig {
  int num_aps = 5;
  int stations_min = 25;
  int stations_max = 40;
  double area_side_m = 40.0;
  int default_walls = 0;
};

/// Seeded generation: APs uniform in the square; per AP, the station count is
/// drawn from [stations_min, stations_max], 20% of them placed within
/// r in [1,3] m of the AP and the rest within r in [1,8] m.
Topology generate_topology(const TopologyConfig& config, std::uint64_t seed);

}  // namespace mlochan::sim

#endif
