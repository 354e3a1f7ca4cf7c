#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "actmap/activity.hpp"
#include "actmap/grid.hpp"

namespace actmap {

/// A grid plus planning endpoints. Sources are mandatory, targets optional.
struct Scene {
  GridMap grid;
  SourceSet sources;
  std::vector<Coord> targets;
};

/// Moving AI benchmark map. Header must read `type octile`, `height H`,
/// `width W`, `map`, followed by H rows of W cells. `.` and `G` are free;
/// `@ O T S W` are obstacles (binary world: swamp and water count as
/// blocked). Any other byte is a ParseError naming line and column.
GridMap parse_movingai(std::string_view text);

/// Canonical re-emission with `.` and `@` cells.
std::string emit_movingai(const GridMap& grid);

/// ASCII scene: `.` free, `#` obstacle, `S` source, `T` target. Rows must
/// be equal length and at least one source is required.
Scene parse_ascii_scene(std::string_view text);

std::string emit_ascii_scene(const Scene& scene);

/// Binary portable graymap (P5). Maxval is 255, or 65535 when the map's
/// maximum exceeds 255 (two bytes per sample, big-endian). Values rescale
/// linearly so the map maximum hits maxval and zero stays zero; byte-exact
/// for identical inputs.
std::string export_pgm(const ActivityMap& activity);

}  // namespace actmap
