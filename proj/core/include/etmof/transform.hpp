#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace etmof {

enum class TransformKind : int { Identity = 0, Rotation = 1, Shift = 2, ShiftRotation = 3 };

/// Seeded rotation/shift pair applied as R * (x - o). The rotation is stored
/// as dense orthogonal blocks along the diagonal: one full block up to
/// dimension 1024, 64x64 blocks beyond that (a dense matrix at n = 10000
/// would cost ~800 MB and the large-scale instances do not rotate anyway).
struct TransformBundle {
  int dim = 0;
  std::uint64_t seed = 0;
  std::vector<double> shift;      // empty when the bundle has no shift
  std::vector<double> rotation;   // concatenated row-major blocks
  std::vector<int> block_dims;    // empty when the bundle has no rotation

  bool has_rotation() const { return !block_dims.empty(); }
  bool has_shift() const { return !shift.empty(); }
  bool is_identity() const { return !has_rotation() && !has_shift(); }

  std::vector<double> apply(std::span<const double> x) const;

  /// Inverse map x = R^T z + o; used to place points on a transformed
  /// function's optimum and for cross-implementation validation dumps.
  std::vector<double> apply_inverse(std::span<const double> z) const;
};

/// Haar-distributed orthogonal matrix: QR factorization of a seeded
/// standard-normal matrix with R's diagonal signs folded into Q, which makes
/// the result the unique Q-with-positive-diagonal-R factor and therefore
/// reproducible by any QR implementation.
std::vector<double> make_rotation_matrix(std::uint64_t seed, int dim);

/// Componentwise uniform over the central 80% of [lo, hi].
std::vector<double> make_shift_vector(std::uint64_t seed, int dim, double lo, double hi);

TransformBundle make_transform(TransformKind kind, std::uint64_t seed, int dim,
                               double lo, double hi);

/// Max infinity-norm deviation of R^T R from the identity (orthogonality audit).
double rotation_orthogonality_error(const TransformBundle& b);

/// Stable per-bundle seed: every (instance, task, group, kind) combination
/// under one suite tag gets its own stream, which is what makes "different
/// rotation matrixes are used" hold across tasks.
std::uint64_t bundle_seed(std::string_view suite_tag, int instance_id, int task_index,
                          int group_index, TransformKind kind);

inline constexpr std::string_view kSuiteVersionTag = "ETMOF-1.0";

} // namespace etmof
