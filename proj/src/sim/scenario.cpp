#include "mlochan/sim/scenario.hpp"

#include <fstream>
#include <stdexcept>

namespace mlochan::sim {

namespace {

NodeRef parse_node(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("scenario: node must look like 'ap:0' or 'sta:3'");
  const std::string kind = s.substr(0, colon);
  const int id = std::stoi(s.substr(colon + 1));
  if (kind == "ap") return {NodeRef::Ap, id};
  if (kind == "sta") return {NodeRef::Sta, id};
  throw std::invalid_argument("scenario: unknown node kind '" + kind + "'");
}

std::string node_to_string(const NodeRef& n) {
  return (n.kind == NodeRef::Ap ? "ap:" : "sta:") + std::to_string(n.id);
}

}  // namespace

void Scenario::validate() const {
  if (num_aps < 1) throw std::invalid_argument("scenario: num_aps must be >= 1");
  if (!(area_side_m > 0.0))
    throw std::invalid_argument("scenario: area_side_m must be positive");
  if (stations_min < 1 || stations_max < stations_min)
    throw std::invalid_argument("scenario: invalid stations range");
  if (bands.empty()) throw std::invalid_argument("scenario: at least one band required");
  for (const auto& b : bands) b.validate();
  for (size_t i = 0; i < bands.size(); ++i)
    for (size_t j = i + 1; j < bands.size(); ++j)
      if (bands[i].band == bands[j].band)
        throw std::invalid_argument("scenario: duplicate band entry");
  mcs_table.validate();
  for (const auto& rule : wall_rules)
    if (rule.walls < 0) throw std::invalid_argument("scenario: negative wall count");
}

Environment Scenario::build_environment(std::uint64_t topology_seed) const {
  validate();
  TopologyConfig tc;
  tc.num_aps = num_aps;
  tc.stations_min = stations_min;
  tc.stations_max = stations_max;
  tc.area_side_m = area_side_m;
  tc.default_walls = default_walls;
  Topology topo = generate_topology(tc, topology_seed);
  for (const auto& rule : wall_rules) topo.set_walls(rule.a, rule.b, rule.walls);
  return Environment(std::move(topo), bands, mcs_table);
}

int Scenario::band_index(Band b) const {
  for (size_t i = 0; i < bands.size(); ++i)
    if (bands[i].band == b) return static_cast<int>(i);
  return -1;
}

nlohmann::json Scenario::to_json() const {
  nlohmann::json j;
  j["area_side_m"] = area_side_m;
  j["num_aps"] = num_aps;
  j["stations_per_ap"] = {stations_min, stations_max};
  j["seed"] = seed;
  j["default_walls"] = default_walls;
  j["bands"] = nlohmann::json::array();
  for (const auto& b : bands) {
    j["bands"].push_back({{"band", to_string(b.band)},
                          {"carrier_freq_ghz", b.carrier_freq_ghz},
                          {"bandwidth_mhz", b.bandwidth_mhz},
                          {"num_channels", b.num_channels},
                          {"tx_power_ap_dbm", b.tx_power_ap_dbm},
                          {"tx_power_sta_dbm", b.tx_power_sta_dbm},
                          {"noise_figure_db", b.noise_figure_db},
                          {"cca_threshold_dbm", b.cca_threshold_dbm}});
  }
  j["mcs_table"] = nlohmann::json::object();
  for (const auto& [bw, ladder] : mcs_table.entries())
    j["mcs_table"][std::to_string(bw)] = ladder;
  if (!wall_rules.empty()) {
    j["walls"] = nlohmann::json::array();
    for (const auto& rule : wall_rules)
      j["walls"].push_back({{"a", node_to_string(rule.a)},
                            {"b", node_to_string(rule.b)},
                            {"w", rule.walls}});
  }
  return j;
}

Scenario Scenario::from_json(const nlohmann::json& j) {
  Scenario sc;
  if (j.contains("area_side_m")) sc.area_side_m = j.at("area_side_m").get<double>();
  if (j.contains("num_aps")) sc.num_aps = j.at("num_aps").get<int>();
  if (j.contains("stations_per_ap")) {
    const auto& r = j.at("stations_per_ap");
    if (!r.is_array() || r.size() != 2)
      throw std::invalid_argument("scenario: stations_per_ap must be [min, max]");
    sc.stations_min = r[0].get<int>();
    sc.stations_max = r[1].get<int>();
  }
  if (j.contains("seed")) sc.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("default_walls")) sc.default_walls = j.at("default_walls").get<int>();
  if (j.contains("bands")) {
    sc.bands.clear();
    for (const auto& jb : j.at("bands")) {
      const auto name = jb.at("band").get<std::string>();
      auto band = band_from_string(name);
      if (!band) throw std::invalid_argument("scenario: unknown band '" + name + "'");
      BandSpec spec = default_band_spec(*band);
      if (jb.contains("carrier_freq_ghz"))
        spec.carrier_freq_ghz = jb.at("carrier_freq_ghz").get<double>();
      if (jb.contains("bandwidth_mhz"))
        spec.bandwidth_mhz = jb.at("bandwidth_mhz").get<double>();
      if (jb.contains("num_channels"))
        spec.num_channels = jb.at("num_channels").get<int>();
      if (jb.contains("tx_power_ap_dbm"))
        spec.tx_power_ap_dbm = jb.at("tx_power_ap_dbm").get<double>();
      if (jb.contains("tx_power_sta_dbm"))
        spec.tx_power_sta_dbm = jb.at("tx_power_sta_dbm").get<double>();
      if (jb.contains("noise_figure_db"))
        spec.noise_figure_db = jb.at("noise_figure_db").get<double>();
      if (jb.contains("cca_threshold_dbm"))
        spec.cca_threshold_dbm = jb.at("cca_threshold_dbm").get<double>();
      sc.bands.push_back(spec);
    }
  }
  if (j.contains("mcs_table")) {
    for (const auto& [bw_str, ladder] : j.at("mcs_table").items()) {
      if (!ladder.is_array() || ladder.size() != McsTable::kNumMcs)
        throw std::invalid_argument("scenario: MCS ladder must have 14 entries");
      std::array<double, McsTable::kNumMcs> arr{};
      for (int i = 0; i < McsTable::kNumMcs; ++i) arr[i] = ladder[i].get<double>();
      sc.mcs_table.set(std::stod(bw_str), arr);
    }
  }
  if (j.contains("walls")) {
    for (const auto& jw : j.at("walls")) {
      WallRule rule;
      rule.a = parse_node(jw.at("a").get<std::string>());
      rule.b = parse_node(jw.at("b").get<std::string>());
      rule.walls = jw.at("w").get<int>();
      sc.wall_rules.push_back(rule);
    }
  }
  sc.validate();
  return sc;
}

Scenario Scenario::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("scenario: cannot open " + file.string());
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

void Scenario::save(const std::filesystem::path& file) const {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("scenario: cannot write " + file.string());
  out << to_json().dump(2) << "\n";
}

}  // namespace mlochan::sim
