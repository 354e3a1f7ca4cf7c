#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "actmap/coord.hpp"

namespace actmap {

/// Largest supported extent per axis. Keeps coordinates and activity values
/// (at most layer count + 1) inside 32-bit integers even for the worst-case
/// layer bound on the largest grid.
inline constexpr std::uint32_t kMaxGridDim = 65535;

/// Immutable occupancy grid. Cells are either free or an obstacle; safe to
/// share across threads after construction.
class GridMap {
 public:
  /// `occupancy` is row-major, one byte per cell, nonzero = obstacle.
  GridMap(std::uint32_t width, std::uint32_t height,
          std::vector<std::uint8_t> occupancy);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t cell_count() const noexcept { return occupancy_.size(); }

  bool in_bounds(Coord c) const noexcept {
    return c.row < height_ && c.col < width_;
  }
  bool is_obstacle(Coord c) const noexcept {
    return occupancy_[index(c)] != 0;
  }
  bool is_obstacle(std::uint32_t row, std::uint32_t col) const noexcept {
    return occupancy_[static_cast<std::size_t>(row) * width_ + col] != 0;
  }
  bool is_free(Coord c) const noexcept { return !is_obstacle(c); }

  std::size_t index(Coord c) const noexcept {
    return static_cast<std::size_t>(c.row) * width_ + c.col;
  }

  std::uint64_t obstacle_count() const noexcept { return obstacle_count_; }
  std::uint64_t free_count() const noexcept {
    return cell_count() - obstacle_count_;
  }

  std::span<const std::uint8_t> occupancy() const noexcept {
    return occupancy_;
  }

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::uint64_t obstacle_count_;
  std::vector<std::uint8_t> occupancy_;
};

/// Builds a grid with exactly the listed obstacle cells. Rejects zero
/// dimensions, dimensions above kMaxGridDim, and out-of-bounds obstacles
/// (the error names the offending coordinate).
GridMap build_grid(std::uint32_t width, std::uint32_t height,
                   std::span<const Coord> obstacles);

/// Serpentine worst-case maze: full obstacle rows with a one-cell gap at
/// alternating ends, leaving a single corridor that zig-zags across the
/// grid. The serpentine runs along the longer axis; for width >= height the
/// odd rows are walls, the first wall's gap sits at column 0, the next at
/// column width-1, and so on. Free cells form one 8-connected chain.
GridMap comb_maze(std::uint32_t width, std::uint32_t height);

/// Deterministic random grid: exactly round(density * cells) obstacles,
/// placed by a seeded shuffle. Pure function of (width, height, density,
/// seed); no connectivity guarantee.
GridMap random_maze(std::uint32_t width, std::uint32_t height, double density,
                    std::uint64_t seed);

/// Nonempty, duplicate-free set of source cells, each in bounds and free.
/// Stored sorted (row-major) so iteration order is deterministic.
class SourceSet {
 public:
  SourceSet(const GridMap& grid, std::span<const Coord> sources);

  const std::vector<Coord>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  bool contains(Coord c) const noexcept;

 private:
  std::vector<Coord> coords_;
};

}  // namespace actmap
