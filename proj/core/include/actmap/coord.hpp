#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace actmap {

/// Grid cell position. Row 0 is the top row, matching image conventions;
/// bounds are checked at the sites that use a coordinate against a grid.
struct Coord {
  std::uint32_t row = 0;
  std::uint32_t col = 0;

  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

/// Chebyshev distance: diagonal and axis steps both count 1.
inline std::uint32_t chebyshev(Coord a, Coord b) {
  const std::uint32_t dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  const std::uint32_t dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  return std::max(dr, dc);
}

inline std::string to_string(Coord c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace actmap
