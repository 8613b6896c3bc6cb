#ifndef MLOCHAN_NN_TENSOR_HPP
#define MLOCHAN_NN_TENSOR_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mlochan::nn {

/// Dense row-major matrix of doubles. Everything in the Q-network kernel is
/// small (at most 64x64), so a flat vector is all we need.
struct Tensor {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
  size_t size() const { return v.size(); }
  void zero() { std::fill(v.begin(), v.end(), 0.0); }
};

/// y += W x
inline void matvec_acc(const Tensor& W, std::span<const double> x, std::span<double> y) {
  if (static_cast<int>(x.size()) != W.cols || static_cast<int>(y.size()) != W.rows)
    throw std::invalid_argument("matvec_acc: shape mismatch");
  const double* w = W.v.data();
  for (int r = 0; r < W.rows; ++r) {
    double acc = 0.0;
    for (int c = 0; c < W.cols; ++c) acc += w[c] * x[c];
    y[r] += acc;
    w += W.cols;
  }
}

/// x += W^T a
inline void matvec_transpose_acc(const Tensor& W, std::span<const double> a,
                                 std::span<double> x) {
  if (static_cast<int>(a.size()) != W.rows || static_cast<int>(x.size()) != W.cols)
    throw std::invalid_argument("matvec_transpose_acc: shape mismatch");
  const double* w = W.v.data();
  for (int r = 0; r < W.rows; ++r) {
    const double ar = a[r];
    for (int c = 0; c < W.cols; ++c) x[c] += w[c] * ar;
    w += W.cols;
  }
}

/// W += a b^T
inline void outer_acc(std::span<const double> a, std::span<const double> b, Tensor& W) {
  if (static_cast<int>(a.size()) != W.rows || static_cast<int>(b.size()) != W.cols)
    throw std::invalid_argument("outer_acc: shape mismatch");
  double* w = W.v.data();
  for (int r = 0; r < W.rows; ++r) {
    const double ar = a[r];
    for (int c = 0; c < W.cols; ++c) w[c] += ar * b[c];
    w += W.cols;
  }
}

}  // namespace mlochan::nn

#endif
