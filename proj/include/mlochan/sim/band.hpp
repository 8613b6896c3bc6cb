#ifndef MLOCHAN_SIM_BAND_HPP
#define MLOCHAN_SIM_BAND_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlochan::sim {

enum class Band { GHz2_4 = 0, GHz5 = 1, GHz6 = 2 };

constexpr std::array<Band, 3> kAllBands = {Band::GHz2_4, Band::GHz5, Band::GHz6};

const char* to_string(Band b);
std::optional<Band> band_from_string(std::string_view s);

/// Per-interface radio parameters. CCA threshold and STA transmit power are
/// carried in the configuration but not used by the flow-level SINR model
/// (downlink only, no carrier-sense dynamics).
struct BandSpec {
  Band band = Band::GHz2_4;
  double carrier_freq_ghz = 2.437;
  double bandwidth_mhz = 20.0;
  int num_channels = 3;
  double tx_power_ap_dbm = 20.0;
  double tx_power_sta_dbm = 15.0;
  double noise_figure_db = 7.0;
  double cca_threshold_dbm = -82.0;

  /// Throws std::invalid_argument when a field is out of its legal range.
  void validate() const;
};

BandSpec default_band_spec(Band b);
std::vector<BandSpec> default_bands();

/// Minimum-SINR thresholds (dB) for MCS 0..13, keyed by channel bandwidth.
class McsTable {
 public:
  static constexpr int kNumMcs = 14;

  static McsTable with_defaults();

  void set(double bandwidth_mhz, const std::array<double, kNumMcs>& thresholds);
  bool has(double bandwidth_mhz) const;
  const std::array<double, kNumMcs>& thresholds_for(double bandwidth_mhz) const;

  /// Throws std::invalid_argument unless every ladder is strictly increasing.
  void validate() const;

  const std::map<int, std::array<double, kNumMcs>>& entries() const { return table_; }

 private:
  static int key(double bandwidth_mhz);
  std::map<int, std::array<double, kNumMcs>> table_;
};

/// Largest MCS whose threshold is <= sinr; anything below the lowest
/// threshold degrades to MCS 0.
int map_sinr_to_mcs(double sinr_db, const McsTable& table, double bandwidth_mhz);

}  // namespace mlochan::sim

#endif
