#pragma once

#include <cstdint>
#include <vector>

#include "actmap/activity.hpp"
#include "actmap/grid.hpp"

namespace actmap {

/// Diagonal moves that squeeze between two diagonally adjacent obstacles:
/// kStrict forbids them, kPermissive allows them. Shared by straightening
/// and the octile oracle so both measure the same move set.
enum class CornerRule { kStrict, kPermissive };

/// Ordered cell sequence from the target (front) back to a source (back).
/// Consecutive points are at Chebyshev distance 1 and never on obstacles.
struct Path {
  std::vector<Coord> points;

  Coord target() const { return points.front(); }
  Coord source() const { return points.back(); }
  std::size_t steps() const { return points.size() - 1; }
};

struct PathMetrics {
  std::uint64_t steps = 0;
  /// Sum of per-move lengths: 1 per axis move, sqrt(2) per diagonal move.
  double euclidean_length = 0.0;
};

PathMetrics path_metrics(const Path& path);

/// Greedy ascent over the 8-neighborhood; ties are broken by a generator
/// seeded with `seed`. Step count always equals the hop distance of the
/// target, whatever the seed. Rejects targets on obstacles; throws
/// UncoveredTargetError when the target's activity is zero.
Path reconstruct_simple(const ActivityMap& activity, const GridMap& grid,
                        const SourceSet& sources, Coord target,
                        std::uint64_t seed);

/// Axis-neighbor ascent in fixed preference order (left, right, up, down),
/// falling back to a diagonal step only where no axis move is viable, then
/// straightened by collapsing sqrt(2) corners. Deterministic.
Path reconstruct_euclidean(const ActivityMap& activity, const GridMap& grid,
                           const SourceSet& sources, Coord target,
                           CornerRule rule = CornerRule::kStrict);

/// Removes interior points whose neighbors sit exactly sqrt(2) apart,
/// rescanning until a fixpoint. Only deletes points; endpoints are kept.
/// Paths shorter than 3 points are returned unchanged.
Path straighten(const Path& path);

/// Grid-aware variant: under kStrict a corner is only removed if the
/// resulting diagonal does not pass between two diagonally adjacent
/// obstacles. As the removed point itself is free, reconstruction-produced
/// paths straighten identically under both rules.
Path straighten(const Path& path, const GridMap& grid, CornerRule rule);

}  // namespace actmap
