#include "mlochan/nn/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace mlochan::nn {

AdamState::AdamState(const QNetworkParams& shape, AdamConfig config)
    : config_(config) {
  for (const auto& slot : shape.slots()) {
    m_.emplace_back(slot.count, 0.0);
    v_.emplace_back(slot.count, 0.0);
  }
}

void AdamState::apply(QNetworkParams& params, const QNetworkGrads& grads) {
  auto pslots = params.slots();
  auto gslots = grads.g.slots();
  if (pslots.size() != m_.size())
    throw std::invalid_argument("AdamState: parameter layout mismatch");

  for (size_t t = 0; t < gslots.size(); ++t) {
    if (gslots[t].count != m_[t].size())
      throw std::invalid_argument("AdamState: gradient shape mismatch");
    for (size_t i = 0; i < gslots[t].count; ++i)
      if (!std::isfinite(gslots[t].data[i]))
        throw std::invalid_argument(std::string("AdamState: non-finite gradient in ") +
                                    gslots[t].name);
  }

  ++step_;
  const double bc1 = 1.0 - std::pow(config_.beta1, static_cast<double>(step_));
  const double bc2 = 1.0 - std::pow(config_.beta2, static_cast<double>(step_));
  for (size_t t = 0; t < pslots.size(); ++t) {
    double* p = pslots[t].data;
    const double* gr = gslots[t].data;
    auto& m = m_[t];
    auto& v = v_[t];
    for (size_t i = 0; i < pslots[t].count; ++i) {
      m[i] = config_.beta1 * m[i] + (1.0 - config_.beta1) * gr[i];
      v[i] = config_.beta2 * v[i] + (1.0 - config_.beta2) * gr[i] * gr[i];
      const double mhat = m[i] / bc1;
      const double vhat = v[i] / bc2;
      p[i] -= config_.lr * mhat / (std::sqrt(vhat) + config_.eps);
    }
  }
}

}  // namespace mlochan::nn
