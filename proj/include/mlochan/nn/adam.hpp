#ifndef MLOCHAN_NN_ADAM_HPP
#define MLOCHAN_NN_ADAM_HPP

#include <cstdint>
#include <vector>

#include "mlochan/nn/qnetwork.hpp"

namespace mlochan::nn {

struct AdamConfig {
  double lr = 8e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// Adaptive moment estimation with bias correction. Moment buffers mirror
/// the parameter slots of the network the optimizer was built for.
class AdamState {
 public:
  AdamState(const QNetworkParams& shape, AdamConfig config);

  /// One update step. Throws std::invalid_argument when any gradient entry
  /// is non-finite; parameters are left untouched in that case.
  void apply(QNetworkParams& params, const QNetworkGrads& grads);

  long step_count() const { return step_; }
  const AdamConfig& config() const { return config_; }

 private:
  AdamConfig config_;
  long step_ = 0;
  std::vector<std::vector<double>> m_;
  std::vector<std::vector<double>> v_;
};

}  // namespace mlochan::nn

#endif
