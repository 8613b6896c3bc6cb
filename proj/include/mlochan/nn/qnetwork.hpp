#ifndef MLOCHAN_NN_QNETWORK_HPP
#define MLOCHAN_NN_QNETWORK_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mlochan/nn/tensor.hpp"

namespace mlochan::nn {

/// Semi-orthogonal matrix: the Gram matrix over the smaller dimension equals
/// gain^2 * I. Built from a seeded Gaussian draw followed by Householder QR.
Tensor orthogonal_init(int rows, int cols, double gain, std::uint64_t seed);

struct QNetworkDims {
  int input_dim = 0;
  int gru_hidden = 64;
  int mlp_hidden = 64;
  int num_actions = 0;

  bool operator==(const QNetworkDims&) const = default;
};

/// Recurrent Q-network: one GRU cell followed by a two-layer perceptron head
/// (ReLU hidden layer, linear output of one Q-value per action).
struct QNetworkParams {
  QNetworkDims dims;

  // GRU gates: update (z), reset (r), candidate (n).
  Tensor wz, wr, wn;              // gru_hidden x input_dim
  Tensor uz, ur, un;              // gru_hidden x gru_hidden
  std::vector<double> bz, br, bn; // gru_hidden

  // Head.
  Tensor w1;               // mlp_hidden x gru_hidden
  std::vector<double> b1;  // mlp_hidden
  Tensor w2;               // num_actions x mlp_hidden
  std::vector<double> b2;  // num_actions

  static QNetworkParams zeros(const QNetworkDims& dims);
  /// Orthogonal weight matrices (gain 1), zero biases.
  static QNetworkParams init(const QNetworkDims& dims, std::uint64_t seed);

  struct Slot {
    const char* name;
    double* data;
    size_t count;
  };
  /// Fixed-order view over all 13 parameter tensors; optimizers,
  /// serialization and the finite-difference checker all iterate this.
  std::array<Slot, 13> slots();
  std::array<Slot, 13> slots() const;  // data pointers are const-casted views

  size_t parameter_count() const;
  bool all_finite() const;
};

/// Gradients shaped like QNetworkParams.
struct QNetworkGrads {
  QNetworkParams g;
  explicit QNetworkGrads(const QNetworkDims& dims) : g(QNetworkParams::zeros(dims)) {}
  void zero();
};

/// Intermediates of one recurrent step, recorded by the forward pass and
/// consumed by the backward pass.
struct GruCache {
  std::vector<double> x, h_in;
  std::vector<double> z, r, rh, n, h_out;
};

struct QForwardCache {
  GruCache gru;
  std::vector<double> y1;  // ReLU output of the hidden layer
  std::vector<double> q;
};

/// One GRU step:
///   z = sigmoid(Wz x + Uz h + bz)
///   r = sigmoid(Wr x + Ur h + br)
///   n = tanh(Wn x + Un (r . h) + bn)
///   h' = (1 - z) . n + z . h
std::vector<double> gru_forward(std::span<const double> x, std::span<const double> h,
                                const QNetworkParams& p, GruCache* cache = nullptr);

struct QForwardResult {
  std::vector<double> q;      // num_actions
  std::vector<double> h_out;  // gru_hidden
};

QForwardResult q_forward(std::span<const double> obs_encoding,
                         std::span<const double> h_in, const QNetworkParams& p,
                         QForwardCache* cache = nullptr);

/// Reverse-mode step for the recorded forward pass: accumulates dL/dtheta
/// into `grads` given dL/dq. Gradients w.r.t. the inputs are discarded
/// (training unrolls a single step from a stored hidden state).
void q_backward(const QForwardCache& cache, const QNetworkParams& p,
                std::span<const double> dq, QNetworkGrads& grads);

}  // namespace mlochan::nn

#endif
