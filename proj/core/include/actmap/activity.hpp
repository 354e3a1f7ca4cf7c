#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "actmap/coord.hpp"
#include "actmap/grid.hpp"

namespace actmap {

/// Integer activity field over a grid. After L propagation layers every free
/// cell holds max(0, L+1 - d) where d is the 8-connected hop distance to the
/// nearest source; obstacle cells stay at zero.
class ActivityMap {
 public:
  ActivityMap(std::uint32_t width, std::uint32_t height,
              std::vector<std::uint32_t> values, std::uint32_t layers_applied);

  /// Layer-zero state: 1 at each source, 0 elsewhere.
  static ActivityMap initial(const GridMap& grid, const SourceSet& sources);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::uint32_t layers_applied() const noexcept { return layers_applied_; }

  std::uint32_t at(Coord c) const noexcept { return values_[index(c)]; }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const noexcept {
    return values_[static_cast<std::size_t>(row) * width_ + col];
  }

  std::size_t index(Coord c) const noexcept {
    return static_cast<std::size_t>(c.row) * width_ + c.col;
  }

  std::uint32_t max_value() const noexcept;
  /// Number of free cells still at zero (obstacles excluded).
  std::uint64_t zero_free_cells(const GridMap& grid) const;

  std::span<const std::uint32_t> values() const noexcept { return values_; }

  friend bool operator==(const ActivityMap& a, const ActivityMap& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ &&
           a.values_ == b.values_;
  }

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::uint32_t layers_applied_;
  std::vector<std::uint32_t> values_;
};

}  // namespace actmap
