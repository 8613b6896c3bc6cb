#include "mlochan/sim/band.hpp"

#include <cmath>
#include <stdexcept>

namespace mlochan::sim {

const char* to_string(Band b) {
  switch (b) {
    case Band::GHz2_4: return "2.4GHz";
    case Band::GHz5: return "5GHz";
    case Band::GHz6: return "6GHz";
  }
  return "?";
}

std::optional<Band> band_from_string(std::string_view s) {
  if (s == "2.4GHz" || s == "2.4") return Band::GHz2_4;
  if (s == "5GHz" || s == "5") return Band::GHz5;
  if (s == "6GHz" || s == "6") return Band::GHz6;
  return std::nullopt;
}

void BandSpec::validate() const {
  if (num_channels < 1)
    throw std::invalid_argument("BandSpec: num_channels must be >= 1");
  if (!(carrier_freq_ghz > 0.0))
    throw std::invalid_argument("BandSpec: carrier frequency must be positive");
  const bool bw_ok = bandwidth_mhz == 20.0 || bandwidth_mhz == 40.0 ||
                     bandwidth_mhz == 80.0 || bandwidth_mhz == 160.0;
  if (!bw_ok)
    throw std::invalid_argument("BandSpec: bandwidth must be one of 20/40/80/160 MHz");
}

BandSpec default_band_spec(Band b) {
  BandSpec spec;
  spec.band = b;
  switch (b) {
    case Band::GHz2_4:
      spec.carrier_freq_ghz = 2.437;
      spec.bandwidth_mhz = 20.0;
      break;
    case Band::GHz5:
      spec.carrier_freq_ghz = 5.230;
      spec.bandwidth_mhz = 80.0;
      break;
    case Band::GHz6:
      spec.carrier_freq_ghz = 6.295;
      spec.bandwidth_mhz = 160.0;
      break;
  }
  return spec;
}

std::vector<BandSpec> default_bands() {
  return {default_band_spec(Band::GHz2_4), default_band_spec(Band::GHz5),
          default_band_spec(Band::GHz6)};
}

int McsTable::key(double bandwidth_mhz) {
  return static_cast<int>(std::lround(bandwidth_mhz));
}

McsTable McsTable::with_defaults() {
  // 20 MHz ladder in the style of 802.11ax link adaptation; each bandwidth
  // doubling shifts the ladder by +3 dB. These are configurable defaults,
  // not calibrated measurements.
  const std::array<double, kNumMcs> base = {2.0,  5.0,  8.0,  11.0, 14.0,
                                            17.5, 19.0, 20.5, 24.5, 26.5,
                                            28.5, 31.0, 33.5, 35.5};
  McsTable t;
  double shift = 0.0;
  for (double bw : {20.0, 40.0, 80.0, 160.0}) {
    std::array<double, kNumMcs> ladder = base;
    for (auto& v : ladder) v += shift;
    t.set(bw, ladder);
    shift += 3.0;
  }
  return t;
}

void McsTable::set(double bandwidth_mhz, const std::array<double, kNumMcs>& thresholds) {
  table_[key(bandwidth_mhz)] = thresholds;
}

bool McsTable::has(double bandwidth_mhz) const {
  return table_.count(key(bandwidth_mhz)) != 0;
}

const std::array<double, McsTable::kNumMcs>& McsTable::thresholds_for(
    double bandwidth_mhz) const {
  auto it = table_.find(key(bandwidth_mhz));
  if (it == table_.end())
    throw std::invalid_argument("McsTable: no thresholds for bandwidth " +
                                std::to_string(bandwidth_mhz) + " MHz");
  return it->second;
}

void McsTable::validate() const {
  for (const auto& [bw, ladder] : table_) {
    for (int i = 1; i < kNumMcs; ++i) {
      if (!(ladder[i] > ladder[i - 1]))
        throw std::invalid_argument("McsTable: thresholds for " + std::to_string(bw) +
                                    " MHz are not strictly increasing");
    }
  }
}

int map_sinr_to_mcs(double sinr_db, const McsTable& table, double bandwidth_mhz) {
  const auto& ladder = table.thresholds_for(bandwidth_mhz);
  int mcs = 0;
  for (int i = 0; i < McsTable::kNumMcs; ++i) {
    if (sinr_db >= ladder[i]) mcs = i;
  }
  return mcs;
}

}  // namespace mlochan::sim
