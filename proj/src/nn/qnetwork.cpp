#include "mlochan/nn/qnetwork.hpp"

#include <cmath>
#include <stdexcept>

#include "mlochan/common/rng.hpp"

namespace mlochan::nn {

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Householder QR of a Gaussian draw; returns the thin Q factor (rows >= cols)
// with the R diagonal forced positive so the result is unique per seed.
Tensor thin_q_factor(int rows, int cols, Rng& rng) {
  Tensor a(rows, cols);
  for (auto& v : a.v) v = rng.normal();

  std::vector<std::vector<double>> reflectors(cols);
  std::vector<double> r_diag(cols, 0.0);
  for (int k = 0; k < cols; ++k) {
    double norm = 0.0;
    for (int i = k; i < rows; ++i) norm += a.at(i, k) * a.at(i, k);
    norm = std::sqrt(norm);
    if (norm < 1e-300) {
      reflectors[k] = {};
      r_diag[k] = 1.0;
      continue;
    }
    const double alpha = a.at(k, k) >= 0.0 ? -norm : norm;
    std::vector<double> v(rows - k, 0.0);
    for (int i = k; i < rows; ++i) v[i - k] = a.at(i, k);
    v[0] -= alpha;
    double vnorm = 0.0;
    for (double w : v) vnorm += w * w;
    vnorm = std::sqrt(vnorm);
    if (vnorm < 1e-300) {
      reflectors[k] = {};
      r_diag[k] = alpha;
      continue;
    }
    for (double& w : v) w /= vnorm;
    for (int c = k; c < cols; ++c) {
      double dot = 0.0;
      for (int i = k; i < rows; ++i) dot += v[i - k] * a.at(i, c);
      for (int i = k; i < rows; ++i) a.at(i, c) -= 2.0 * dot * v[i - k];
    }
    reflectors[k] = std::move(v);
    r_diag[k] = a.at(k, k);
  }

  // Q = H_0 ... H_{cols-1} applied to the first `cols` identity columns.
  Tensor q(rows, cols);
  for (int j = 0; j < cols; ++j) q.at(j, j) = 1.0;
  for (int k = cols - 1; k >= 0; --k) {
    const auto& v = reflectors[k];
    if (v.empty()) continue;
    for (int c = 0; c < cols; ++c) {
      double dot = 0.0;
      for (int i = k; i < rows; ++i) dot += v[i - k] * q.at(i, c);
      for (int i = k; i < rows; ++i) q.at(i, c) -= 2.0 * dot * v[i - k];
    }
  }
  for (int j = 0; j < cols; ++j) {
    if (r_diag[j] < 0.0)
      for (int i = 0; i < rows; ++i) q.at(i, j) = -q.at(i, j);
  }
  return q;
}

}  // namespace

Tensor orthogonal_init(int rows, int cols, double gain, std::uint64_t seed) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("orthogonal_init: dimensions must be >= 1");
  Rng rng(seed);
  if (rows >= cols) {
    Tensor q = thin_q_factor(rows, cols, rng);
    for (auto& v : q.v) v *= gain;
    return q;
  }
  Tensor qt = thin_q_factor(cols, rows, rng);
  Tensor q(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) q.at(i, j) = gain * qt.at(j, i);
  return q;
}

QNetworkParams QNetworkParams::zeros(const QNetworkDims& dims) {
  if (dims.input_dim < 1 || dims.gru_hidden < 1 || dims.mlp_hidden < 1 ||
      dims.num_actions < 1)
    throw std::invalid_argument("QNetworkParams: all dimensions must be >= 1");
  QNetworkParams p;
  p.dims = dims;
  const int h = dims.gru_hidden;
  p.wz = Tensor(h, dims.input_dim);
  p.wr = Tensor(h, dims.input_dim);
  p.wn = Tensor(h, dims.input_dim);
  p.uz = Tensor(h, h);
  p.ur = Tensor(h, h);
  p.un = Tensor(h, h);
  p.bz.assign(h, 0.0);
  p.br.assign(h, 0.0);
  p.bn.assign(h, 0.0);
  p.w1 = Tensor(dims.mlp_hidden, h);
  p.b1.assign(dims.mlp_hidden, 0.0);
  p.w2 = Tensor(dims.num_actions, dims.mlp_hidden);
  p.b2.assign(dims.num_actions, 0.0);
  return p;
}

QNetworkParams QNetworkParams::init(const QNetworkDims& dims, std::uint64_t seed) {
  QNetworkParams p = zeros(dims);
  std::uint64_t s = seed;
  auto next = [&s] { return splitmix64(s); };
  p.wz = orthogonal_init(dims.gru_hidden, dims.input_dim, 1.0, next());
  p.wr = orthogonal_init(dims.gru_hidden, dims.input_dim, 1.0, next());
  p.wn = orthogonal_init(dims.gru_hidden, dims.input_dim, 1.0, next());
  p.uz = orthogonal_init(dims.gru_hidden, dims.gru_hidden, 1.0, next());
  p.ur = orthogonal_init(dims.gru_hidden, dims.gru_hidden, 1.0, next());
  p.un = orthogonal_init(dims.gru_hidden, dims.gru_hidden, 1.0, next());
  p.w1 = orthogonal_init(dims.mlp_hidden, dims.gru_hidden, 1.0, next());
  p.w2 = orthogonal_init(dims.num_actions, dims.mlp_hidden, 1.0, next());
  return p;
}

std::array<QNetworkParams::Slot, 13> QNetworkParams::slots() {
  return {{{"wz", wz.v.data(), wz.size()},
           {"uz", uz.v.data(), uz.size()},
           {"bz", bz.data(), bz.size()},
           {"wr", wr.v.data(), wr.size()},
           {"ur", ur.v.data(), ur.size()},
           {"br", br.data(), br.size()},
           {"wn", wn.v.data(), wn.size()},
           {"un", un.v.data(), un.size()},
           {"bn", bn.data(), bn.size()},
           {"w1", w1.v.data(), w1.size()},
           {"b1", b1.data(), b1.size()},
           {"w2", w2.v.data(), w2.size()},
           {"b2", b2.data(), b2.size()}}};
}

std::array<QNetworkParams::Slot, 13> QNetworkParams::slots() const {
  return const_cast<QNetworkParams*>(this)->slots();
}

size_t QNetworkParams::parameter_count() const {
  size_t n = 0;
  for (const auto& s : slots()) n += s.count;
  return n;
}

bool QNetworkParams::all_finite() const {
  for (const auto& s : slots())
    for (size_t i = 0; i < s.count; ++i)
      if (!std::isfinite(s.data[i])) return false;
  return true;
}

void QNetworkGrads::zero() {
  for (auto& s : g.slots()) std::fill(s.data, s.data + s.count, 0.0);
}

std::vector<double> gru_forward(std::span<const double> x, std::span<const double> h,
                                const QNetworkParams& p, GruCache* cache) {
  const int hidden = p.dims.gru_hidden;
  if (static_cast<int>(x.size()) != p.dims.input_dim)
    throw std::invalid_argument("gru_forward: input dimension mismatch");
  if (static_cast<int>(h.size()) != hidden)
    throw std::invalid_argument("gru_forward: hidden dimension mismatch");

  std::vector<double> z(p.bz), r(p.br), n(p.bn);
  matvec_acc(p.wz, x, z);
  matvec_acc(p.uz, h, z);
  matvec_acc(p.wr, x, r);
  matvec_acc(p.ur, h, r);
  for (int i = 0; i < hidden; ++i) z[i] = sigmoid(z[i]);
  for (int i = 0; i < hidden; ++i) r[i] = sigmoid(r[i]);

  std::vector<double> rh(hidden);
  for (int i = 0; i < hidden; ++i) rh[i] = r[i] * h[i];
  matvec_acc(p.wn, x, n);
  matvec_acc(p.un, rh, n);
  for (int i = 0; i < hidden; ++i) n[i] = std::tanh(n[i]);

  std::vector<double> h_out(hidden);
  for (int i = 0; i < hidden; ++i) h_out[i] = (1.0 - z[i]) * n[i] + z[i] * h[i];

  if (cache != nullptr) {
    cache->x.assign(x.begin(), x.end());
    cache->h_in.assign(h.begin(), h.end());
    cache->z = z;
    cache->r = r;
    cache->rh = std::move(rh);
    cache->n = n;
    cache->h_out = h_out;
  }
  return h_out;
}

QForwardResult q_forward(std::span<const double> obs_encoding,
                         std::span<const double> h_in, const QNetworkParams& p,
                         QForwardCache* cache) {
  GruCache local_gru;
  GruCache* gru_cache = cache != nullptr ? &cache->gru : &local_gru;
  std::vector<double> h_out = gru_forward(obs_encoding, h_in, p, gru_cache);

  std::vector<double> y1(p.b1);
  matvec_acc(p.w1, h_out, y1);
  for (auto& v : y1) v = v > 0.0 ? v : 0.0;

  std::vector<double> q(p.b2);
  matvec_acc(p.w2, y1, q);

  if (cache != nullptr) {
    cache->y1 = y1;
    cache->q = q;
  }
  return {std::move(q), std::move(h_out)};
}

void q_backward(const QForwardCache& cache, const QNetworkParams& p,
                std::span<const double> dq, QNetworkGrads& grads) {
  if (cache.q.empty() || cache.gru.h_out.empty())
    throw std::logic_error("q_backward: no recorded forward pass");
  if (dq.size() != cache.q.size())
    throw std::invalid_argument("q_backward: dq dimension mismatch");

  const int hidden = p.dims.gru_hidden;
  QNetworkParams& g = grads.g;

  // Head.
  outer_acc(dq, cache.y1, g.w2);
  for (size_t i = 0; i < dq.size(); ++i) g.b2[i] += dq[i];

  std::vector<double> dy1(p.dims.mlp_hidden, 0.0);
  matvec_transpose_acc(p.w2, dq, dy1);
  for (int i = 0; i < p.dims.mlp_hidden; ++i)
    if (cache.y1[i] <= 0.0) dy1[i] = 0.0;

  outer_acc(dy1, cache.gru.h_out, g.w1);
  for (int i = 0; i < p.dims.mlp_hidden; ++i) g.b1[i] += dy1[i];

  std::vector<double> dh_out(hidden, 0.0);
  matvec_transpose_acc(p.w1, dy1, dh_out);

  // GRU step.
  const auto& c = cache.gru;
  std::vector<double> dn(hidden), dz(hidden), dh(hidden);
  for (int i = 0; i < hidden; ++i) {
    dn[i] = dh_out[i] * (1.0 - c.z[i]);
    dz[i] = dh_out[i] * (c.h_in[i] - c.n[i]);
    dh[i] = dh_out[i] * c.z[i];
  }

  std::vector<double> dan(hidden);
  for (int i = 0; i < hidden; ++i) dan[i] = dn[i] * (1.0 - c.n[i] * c.n[i]);
  outer_acc(dan, c.x, g.wn);
  outer_acc(dan, c.rh, g.un);
  for (int i = 0; i < hidden; ++i) g.bn[i] += dan[i];

  std::vector<double> drh(hidden, 0.0);
  matvec_transpose_acc(p.un, dan, drh);
  std::vector<double> dr(hidden);
  for (int i = 0; i < hidden; ++i) {
    dr[i] = drh[i] * c.h_in[i];
    dh[i] += drh[i] * c.r[i];
  }

  std::vector<double> daz(hidden), dar(hidden);
  for (int i = 0; i < hidden; ++i) {
    daz[i] = dz[i] * c.z[i] * (1.0 - c.z[i]);
    dar[i] = dr[i] * c.r[i] * (1.0 - c.r[i]);
  }
  outer_acc(daz, c.x, g.wz);
  outer_acc(daz, c.h_in, g.uz);
  for (int i = 0; i < hidden; ++i) g.bz[i] += daz[i];
  outer_acc(dar, c.x, g.wr);
  outer_acc(dar, c.h_in, g.ur);
  for (int i = 0; i < hidden; ++i) g.br[i] += dar[i];
}

}  // namespace mlochan::nn
