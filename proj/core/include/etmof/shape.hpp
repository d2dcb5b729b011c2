#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "etmof/pareto.hpp"

namespace etmof {

/// Front geometries. H8 and H10 embed the landscape value g in their
/// displays (degenerated and disconnected fronts), so evaluating them
/// requires g; the others are pure functions of the position aggregates.
enum class Shape : int { H1 = 1, H2, H3, H4, H5, H6, H7, H8, H9, H10 };

std::string_view shape_tag(Shape s); // "H1".."H10"
bool shape_needs_g(Shape s);

/// Maps the m-1 position aggregates y (each in [0,1]) to the m shape values.
/// g must be supplied exactly for H8/H10. H1/H2 are defined for m = 2 only;
/// every other shape accepts any m >= 2.
std::vector<double> eval_shape(Shape s, std::span<const double> y, int m,
                               std::optional<double> g = std::nullopt);

/// A sampled true Pareto front with the normalization box used by the
/// metrics. Points are mutually nondominated; ideal/nadir are the
/// componentwise extremes of the sample.
struct ReferenceFront {
  std::optional<Shape> shape;
  int m = 0;
  std::vector<Objectives> points;
  std::vector<double> ideal;
  std::vector<double> nadir;
};

ReferenceFront make_reference_front(std::vector<Objectives> points,
                                    std::optional<Shape> shape, int m);

/// Samples the true front of a shape (g = 0 substituted where the shape
/// embeds it). m = 2 uses a uniform parameter grid; m >= 3 uses a
/// Das-Dennis simplex lattice (doubled with an inner layer when a single
/// layer falls far short of target_count); H8 samples its degenerate curve;
/// H10 samples a dense grid and keeps the nondominated subset. The result
/// size lands within [0.5, 2] x target_count. target_count must be >= 100.
ReferenceFront sample_reference_front(Shape s, int m, int target_count);

/// Front sample size used by the harness for a given objective count.
int default_front_size(int m);

/// All Das-Dennis weight vectors with h divisions over m objectives.
std::vector<Objectives> das_dennis(int m, int h);

} // namespace etmof
