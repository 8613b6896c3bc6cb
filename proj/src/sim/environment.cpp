#include "mlochan/sim/environment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mlochan::sim {

namespace {
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_db(double mw) { return 10.0 * std::log10(mw); }
}  // namespace

double path_loss_db(double d_m, double f_c_ghz, int walls) {
  if (!std::isfinite(d_m) || !std::isfinite(f_c_ghz))
    throw std::invalid_argument("path_loss_db: non-finite input");
  if (!(f_c_ghz > 0.0))
    throw std::invalid_argument("path_loss_db: carrier frequency must be positive");
  if (walls < 0) throw std::invalid_argument("path_loss_db: walls must be nonnegative");
  const double d = std::max(d_m, 0.1);
  double loss = 40.05 + 20.0 * std::log10(f_c_ghz / 2.4) +
                20.0 * std::log10(std::min(d, 10.0)) + 7.0 * walls;
  if (d > 10.0) loss += 35.0 * std::log10(d / 10.0);
  return loss;
}

double noise_floor_dbm(double bandwidth_mhz, double noise_figure_db) {
  if (!(bandwidth_mhz > 0.0))
    throw std::invalid_argument("noise_floor_dbm: bandwidth must be positive");
  return -174.0 + 10.0 * std::log10(bandwidth_mhz * 1e6) + noise_figure_db;
}

Environment::Environment(Topology topology, std::vector<BandSpec> bands,
                         McsTable mcs_table)
    : topo_(std::move(topology)), bands_(std::move(bands)), mcs_(std::move(mcs_table)) {
  if (bands_.empty()) throw std::invalid_argument("Environment: no bands configured");
  for (const auto& spec : bands_) {
    spec.validate();
    if (!mcs_.has(spec.bandwidth_mhz))
      throw std::invalid_argument(std::string("Environment: MCS table misses ") +
                                  std::to_string(spec.bandwidth_mhz) + " MHz");
  }
  mcs_.validate();
  sta_by_ap_ = topo_.stations_by_ap();

  const int num_ap = num_aps();
  const int num_sta = static_cast<int>(topo_.stations.size());
  ap_sta_dist_.assign(num_ap, std::vector<double>(num_sta, 0.0));
  ap_sta_walls_.assign(num_ap, std::vector<int>(num_sta, 0));
  for (int a = 0; a < num_ap; ++a) {
    for (int s = 0; s < num_sta; ++s) {
      ap_sta_dist_[a][s] = distance_m(topo_.aps[a].pos, topo_.stations[s].pos);
      ap_sta_walls_[a][s] =
          topo_.walls({NodeRef::Ap, a}, {NodeRef::Sta, topo_.stations[s].sta_id});
    }
  }
  for (const auto& spec : bands_) {
    noise_mw_.push_back(dbm_to_mw(noise_floor_dbm(spec.bandwidth_mhz, spec.noise_figure_db)));
  }
}

void Environment::check_assignment(const ChannelAssignment& assignment) const {
  if (assignment.channels.size() != bands_.size())
    throw std::invalid_argument("assignment: band count mismatch");
  for (size_t f = 0; f < bands_.size(); ++f) {
    if (assignment.channels[f].size() != static_cast<size_t>(num_aps()))
      throw std::invalid_argument("assignment: AP count mismatch in band " +
                                  std::string(to_string(bands_[f].band)));
    for (int ch : assignment.channels[f]) {
      if (ch < 1 || ch > bands_[f].num_channels)
        throw std::invalid_argument("assignment: channel index out of range in band " +
                                    std::string(to_string(bands_[f].band)));
    }
  }
}

double Environment::sinr_db(int sta_id, int band_idx,
                            const ChannelAssignment& assignment) const {
  check_assignment(assignment);
  if (sta_id < 0 || sta_id >= static_cast<int>(topo_.stations.size()))
    throw std::invalid_argument("sinr_db: unknown station");
  if (band_idx < 0 || band_idx >= static_cast<int>(bands_.size()))
    throw std::invalid_argument("sinr_db: unknown band");
  return sinr_db_unchecked(sta_id, band_idx, assignment);
}

double Environment::sinr_db_unchecked(int sta_id, int band_idx,
                                      const ChannelAssignment& assignment) const {
  const BandSpec& spec = bands_[band_idx];
  const Station& sta = topo_.stations[sta_id];
  const int serving = sta.serving_ap_id;
  const int channel = assignment.channels[band_idx][serving];

  const double signal_mw = dbm_to_mw(
      spec.tx_power_ap_dbm -
      path_loss_db(ap_sta_dist_[serving][sta_id], spec.carrier_freq_ghz,
                   ap_sta_walls_[serving][sta_id]));
  double denom_mw = noise_mw_[band_idx];
  for (int a = 0; a < num_aps(); ++a) {
    if (a == serving) continue;
    if (assignment.channels[band_idx][a] != channel) continue;
    denom_mw += dbm_to_mw(spec.tx_power_ap_dbm -
                          path_loss_db(ap_sta_dist_[a][sta_id], spec.carrier_freq_ghz,
                                       ap_sta_walls_[a][sta_id]));
  }
  return mw_to_db(signal_mw / denom_mw);
}

std::vector<Environment::BandResult> Environment::step(
    const ChannelAssignment& assignment) const {
  check_assignment(assignment);
  std::vector<BandResult> out(bands_.size());
  for (size_t f = 0; f < bands_.size(); ++f) {
    BandResult& res = out[f];
    res.per_ap_mcs.assign(num_aps(), 0);
    res.team_mcs = std::numeric_limits<int>::max();
    for (int a = 0; a < num_aps(); ++a) {
      int worst = McsTable::kNumMcs - 1;
      if (sta_by_ap_[a].empty()) worst = 0;
      for (int s : sta_by_ap_[a]) {
        const double sinr = sinr_db_unchecked(s, static_cast<int>(f), assignment);
        worst = std::min(worst, map_sinr_to_mcs(sinr, mcs_, bands_[f].bandwidth_mhz));
      }
      res.per_ap_mcs[a] = worst;
      res.team_mcs = std::min(res.team_mcs, worst);
    }
  }
  return out;
}

}  // namespace mlochan::sim
