#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "actmap/activity.hpp"
#include "actmap/grid.hpp"
#include "actmap/reconstruct.hpp"

namespace actmap {

inline constexpr std::uint32_t kUnreachableHops =
    std::numeric_limits<std::uint32_t>::max();

/// Exact octile length a + b*sqrt(2) as an integer pair, so optimality
/// comparisons never depend on floating-point rounding.
struct OctileCost {
  std::int64_t axis = -1;
  std::int64_t diag = -1;

  static constexpr OctileCost zero() { return {0, 0}; }
  static constexpr OctileCost unreachable() { return {-1, -1}; }
  bool is_unreachable() const noexcept { return axis < 0; }

  double value() const noexcept;
  OctileCost plus_axis() const noexcept { return {axis + 1, diag}; }
  OctileCost plus_diag() const noexcept { return {axis, diag + 1}; }

  /// Sign of (a - b) as a real number; exact for |axis|,|diag| < 2^62.
  static int compare(const OctileCost& a, const OctileCost& b) noexcept;

  friend bool operator==(const OctileCost& a, const OctileCost& b) {
    return a.axis == b.axis && a.diag == b.diag;
  }
  friend bool operator<(const OctileCost& a, const OctileCost& b) {
    return compare(a, b) < 0;
  }
};

enum class DistanceMetric { kChebyshevHops, kOctile };

/// Ground-truth distance field from the nearest source. Hop maps store
/// 8-connected step counts; octile maps store exact a + b*sqrt(2) pairs.
class DistanceMap {
 public:
  DistanceMap(std::uint32_t width, std::uint32_t height,
              std::vector<std::uint32_t> hops);
  DistanceMap(std::uint32_t width, std::uint32_t height,
              std::vector<OctileCost> octile);

  DistanceMetric metric() const noexcept { return metric_; }
  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }

  std::uint32_t hops_at(Coord c) const { return hops_[index(c)]; }
  const OctileCost& octile_at(Coord c) const { return octile_[index(c)]; }
  bool reachable(Coord c) const;

 private:
  std::size_t index(Coord c) const noexcept {
    return static_cast<std::size_t>(c.row) * width_ + c.col;
  }

  std::uint32_t width_;
  std::uint32_t height_;
  DistanceMetric metric_;
  std::vector<std::uint32_t> hops_;
  std::vector<OctileCost> octile_;
};

/// Exact 8-connected hop distances from the nearest source (breadth-first).
/// Matches the propagation kernel's move set: diagonal steps are always
/// allowed between free cells.
DistanceMap bfs_multi_source(const GridMap& grid, const SourceSet& sources);

/// Single-origin variant used for nearest-source agreement checks.
DistanceMap bfs_from(const GridMap& grid, Coord origin);

/// Exact shortest octile-weighted distances (axis 1, diagonal sqrt(2)).
/// Diagonal moves obey `rule`, the same corner-cutting convention used by
/// path straightening.
DistanceMap dijkstra_octile(const GridMap& grid, const SourceSet& sources,
                            CornerRule rule = CornerRule::kStrict);

/// Outcome of checking an activity map against the closed-form law
/// value(c) = max(0, L+1 - d(c)) over a hop-distance oracle map.
struct ActivityCheck {
  std::uint64_t violations = 0;
  std::vector<Coord> samples;  // first few offending cells

  bool ok() const noexcept { return violations == 0; }
};

ActivityCheck check_activity(const ActivityMap& activity,
                             const DistanceMap& hop_distances,
                             std::uint32_t layers);

enum class PathKind { kSimple, kEuclidean };

/// Per-target verdict from check_path. Step mismatches on simple paths are
/// hard failures; positive Euclidean excess and nearest-source disagreement
/// are findings.
struct PathCheck {
  PathKind kind = PathKind::kSimple;
  std::uint64_t steps = 0;
  std::uint32_t bfs_hops = 0;
  bool step_optimal = true;  // simple paths: steps == BFS hop distance
  /// Euclidean paths: path length minus octile-Dijkstra distance.
  double euclidean_excess = 0.0;
  bool excess_positive = false;
  /// False when the target cannot be reached under the octile move set
  /// (the path squeezed through a diagonal-only passage the strict rule
  /// forbids); the excess is meaningless in that case.
  bool octile_reachable = true;
  /// Set when the nearest-source check ran.
  std::optional<bool> nearest_source_ok;
};

/// Validates one reconstructed path against the oracle maps. `octile` may
/// be null for simple paths. When `check_nearest` is set, a breadth-first
/// sweep from the target verifies the reached source is hop-nearest.
PathCheck check_path(const Path& path, const GridMap& grid,
                     const DistanceMap& bfs, const DistanceMap* octile,
                     const SourceSet& sources, PathKind kind,
                     bool check_nearest = false);

}  // namespace actmap
