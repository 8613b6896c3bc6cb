#ifndef MLOCHAN_SIM_ENVIRONMENT_HPP
#define MLOCHAN_SIM_ENVIRONMENT_HPP

#include <vector>

#include "mlochan/sim/band.hpp"
#include "mlochan/sim/topology.hpp"

namespace mlochan::sim {

/// Enterprise propagation loss:
///   40.05 + 20 log10(f_c/2.4) + 20 log10(min(d,10))
///   + (d > 10) * 35 log10(d/10) + 7 W
/// Distances below 0.1 m are clamped. Throws on non-finite input.
double path_loss_db(double d_m, double f_c_ghz, int walls);

/// Thermal noise floor: -174 dBm/Hz + 10 log10(BW_Hz) + NF.
double noise_floor_dbm(double bandwidth_mhz, double noise_figure_db);

/// One channel index (1-based) per AP per band; channels[band_idx][ap_id].
struct ChannelAssignment {
  std::vector<std::vector<int>> channels;
};

/// Flow-level snapshot model of an 802.11be MLO network. The object is
/// immutable after construction; step() is a pure function of the assignment,
/// so concurrent queries are safe.
class Environment {
 public:
  struct BandResult {
    std::vector<int> per_ap_mcs;  // worst-station MCS per AP
    int team_mcs = 0;             // min over APs
  };

  Environment(Topology topology, std::vector<BandSpec> bands, McsTable mcs_table);

  /// Downlink SINR at a station: serving-AP power over noise plus the sum of
  /// co-channel AP powers in the same band. Different channel indices are
  /// orthogonal.
  double sinr_db(int sta_id, int band_idx, const ChannelAssignment& assignment) const;

  /// Per-band worst-station MCS per AP and the band's team minimum.
  std::vector<BandResult> step(const ChannelAssignment& assignment) const;

  const Topology& topology() const { return topo_; }
  const std::vector<BandSpec>& bands() const { return bands_; }
  const McsTable& mcs_table() const { return mcs_; }
  int num_aps() const { return static_cast<int>(topo_.aps.size()); }

 private:
  void check_assignment(const ChannelAssignment& assignment) const;
  double sinr_db_unchecked(int sta_id, int band_idx,
                           const ChannelAssignment& assignment) const;

  Topology topo_;
  std::vector<BandSpec> bands_;
  McsTable mcs_;
  std::vector<std::vector<int>> sta_by_ap_;
  // cached geometry: distance and wall count from every AP to every station
  std::vector<std::vector<double>> ap_sta_dist_;
  std::vector<std::vector<int>> ap_sta_walls_;
  std::vector<double> noise_mw_;  // per band
};

}  // namespace mlochan::sim

#endif
