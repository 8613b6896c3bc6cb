#ifndef MLOCHAN_NN_GRADCHECK_HPP
#define MLOCHAN_NN_GRADCHECK_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "mlochan/nn/qnetwork.hpp"

namespace mlochan::nn {

/// Central finite differences of a scalar loss over every parameter of `p`.
/// `loss` must re-read `p` on each call; parameters are perturbed in place
/// and restored. Independent of the analytic backward pass by construction.
inline std::vector<std::vector<double>> finite_difference_gradients(
    QNetworkParams& p, const std::function<double()>& loss, double h_scale = 1e-5) {
  std::vector<std::vector<double>> out;
  for (auto& slot : p.slots()) {
    std::vector<double> g(slot.count, 0.0);
    for (size_t i = 0; i < slot.count; ++i) {
      const double saved = slot.data[i];
      const double h = h_scale * std::max(1.0, std::fabs(saved));
      slot.data[i] = saved + h;
      const double up = loss();
      slot.data[i] = saved - h;
      const double down = loss();
      slot.data[i] = saved;
      g[i] = (up - down) / (2.0 * h);
    }
    out.push_back(std::move(g));
  }
  return out;
}

struct GradCompareResult {
  double max_rel_err = 0.0;
  size_t mismatches = 0;
};

/// Relative error with an absolute floor for entries that are (near) zero on
/// both sides, e.g. parameters off the loss path.
inline GradCompareResult compare_gradients(const QNetworkGrads& analytic,
                                           const std::vector<std::vector<double>>& fd,
                                           double rel_tol = 1e-4,
                                           double abs_tol = 1e-6) {
  GradCompareResult res;
  auto slots = analytic.g.slots();
  for (size_t t = 0; t < slots.size(); ++t) {
    for (size_t i = 0; i < slots[t].count; ++i) {
      const double a = slots[t].data[i];
      const double b = fd[t][i];
      const double diff = std::fabs(a - b);
      if (diff <= abs_tol) continue;
      const double rel = diff / std::max(std::fabs(a), std::fabs(b));
      res.max_rel_err = std::max(res.max_rel_err, rel);
      if (rel > rel_tol) ++res.mismatches;
    }
  }
  return res;
}

}  // namespace mlochan::nn

#endif
