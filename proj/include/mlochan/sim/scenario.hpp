#ifndef MLOCHAN_SIM_SCENARIO_HPP
#define MLOCHAN_SIM_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlochan/sim/environment.hpp"

namespace mlochan::sim {

/// Explicit wall override between two nodes ("ap:0", "sta:3" in the file).
struct WallRule {
  NodeRef a;
  NodeRef b;
  int walls = 0;
};

/// Everything needed to build an Environment. All fields are optional in the
/// file; defaults reproduce the reference network settings (enterprise path
/// loss, 20 dBm APs, NF 7 dB, 25-40 stations per AP, 3 channels per band).
struct Scenario {
  double area_side_m = 40.0;
  int num_aps = 5;
  int stations_min = 25;
  int stations_max = 40;
  std::uint64_t seed = 1;
  int default_walls = 0;
  std::vector<BandSpec> bands = default_bands();
  McsTable mcs_table = McsTable::with_defaults();
  std::vector<WallRule> wall_rules;

  void validate() const;

  /// Builds the environment with an explicit topology seed (training runs
  /// pass their run seed); the zero-argument form uses the scenario seed.
  Environment build_environment(std::uint64_t topology_seed) const;
  Environment build_environment() const { return build_environment(seed); }

  nlohmann::json to_json() const;
  static Scenario from_json(const nlohmann::json& j);
  static Scenario load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;

  int band_index(Band b) const;  // -1 when the band is not configured
};

}  // namespace mlochan::sim

#endif
