#include "etmof/transform.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "etmof/rng.hpp"

namespace etmof {
namespace {

constexpr int kMaxDenseDim = 1024;
constexpr int kLargeBlockDim = 64;

std::vector<int> block_layout(int dim) {
  if (dim <= kMaxDenseDim) return {dim};
  std::vector<int> blocks(static_cast<std::size_t>(dim / kLargeBlockDim), kLargeBlockDim);
  if (dim % kLargeBlockDim != 0) blocks.push_back(dim % kLargeBlockDim);
  return blocks;
}

// One orthogonal block drawn from the shared stream.
void append_block(SplitMix64& rng, int d, std::vector<double>& out) {
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = rng.next_normal();
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out.push_back(q(i, j));
  }
}

} // namespace

std::vector<double> make_rotation_matrix(std::uint64_t seed, int dim) {
  if (dim < 1) throw std::invalid_argument("make_rotation_matrix: dim must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(dim) * dim);
  for (const int d : block_layout(dim)) append_block(rng, d, data);
  return data;
}

std::vector<double> make_shift_vector(std::uint64_t seed, int dim, double lo, double hi) {
  if (dim < 1) throw std::invalid_argument("make_shift_vector: dim must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("make_shift_vector: need lo < hi");
  SplitMix64 rng(seed);
  const double margin = 0.1 * (hi - lo);
  std::vector<double> o(static_cast<std::size_t>(dim));
  for (double& v : o) v = rng.next_in(lo + margin, hi - margin);
  return o;
}

TransformBundle make_transform(TransformKind kind, std::uint64_t seed, int dim,
                               double lo, double hi) {
  TransformBundle b;
  b.dim = dim;
  b.seed = seed;
  if (kind == TransformKind::Shift || kind == TransformKind::ShiftRotation) {
    b.shift = make_shift_vector(hash_combine(seed, 1), dim, lo, hi);
  }
  if (kind == TransformKind::Rotation || kind == TransformKind::ShiftRotation) {
    b.rotation = make_rotation_matrix(hash_combine(seed, 0), dim);
    b.block_dims = block_layout(dim);
  }
  return b;
}

std::vector<double> TransformBundle::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim) {
    throw std::invalid_argument("transform apply: dimension mismatch");
  }
  std::vector<double> z(x.begin(), x.end());
  if (has_shift()) {
    for (int i = 0; i < dim; ++i) z[i] -= shift[i];
  }
  if (!has_rotation()) return z;
  std::vector<double> out(static_cast<std::size_t>(dim));
  std::size_t mat_at = 0;
  int row0 = 0;
  for (const int d : block_dims) {
    for (int i = 0; i < d; ++i) {
      double s = 0.0;
      const double* row = &rotation[mat_at + static_cast<std::size_t>(i) * d];
      for (int j = 0; j < d; ++j) s += row[j] * z[row0 + j];
      out[row0 + i] = s;
    }
    mat_at += static_cast<std::size_t>(d) * d;
    row0 += d;
  }
  return out;
}

std::vector<double> TransformBundle::apply_inverse(std::span<const double> z) const {
  if (static_cast<int>(z.size()) != dim) {
    throw std::invalid_argument("transform apply_inverse: dimension mismatch");
  }
  std::vector<double> x(z.begin(), z.end());
  if (has_rotation()) {
    std::vector<double> t(static_cast<std::size_t>(dim));
    std::size_t mat_at = 0;
    int row0 = 0;
    for (const int d : block_dims) {
      for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j < d; ++j) {
          s += rotation[mat_at + static_cast<std::size_t>(j) * d + i] * x[row0 + j];
        }
        t[row0 + i] = s;
      }
      mat_at += static_cast<std::size_t>(d) * d;
      row0 += d;
    }
    x = std::move(t);
  }
  if (has_shift()) {
    for (int i = 0; i < dim; ++i) x[i] += shift[i];
  }
  return x;
}

double rotation_orthogonality_error(const TransformBundle& b) {
  if (!b.has_rotation()) return 0.0;
  double worst = 0.0;
  std::size_t mat_at = 0;
  for (const int d : b.block_dims) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
          s += b.rotation[mat_at + static_cast<std::size_t>(k) * d + i] *
               b.rotation[mat_at + static_cast<std::size_t>(k) * d + j];
        }
        worst = std::max(worst, std::fabs(s - (i == j ? 1.0 : 0.0)));
      }
    }
    mat_at += static_cast<std::size_t>(d) * d;
  }
  return worst;
}

std::uint64_t bundle_seed(std::string_view suite_tag, int instance_id, int task_index,
                          int group_index, TransformKind kind) {
  std::uint64_t h = fnv1a64(suite_tag);
  h = hash_combine(h, static_cast<std::uint64_t>(instance_id));
  h = hash_combine(h, static_cast<std::uint64_t>(task_index));
  h = hash_combine(h, static_cast<std::uint64_t>(group_index));
  h = hash_combine(h, static_cast<std::uint64_t>(kind));
  return h;
}

} // namespace etmof
