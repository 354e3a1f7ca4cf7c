#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "actmap/activity.hpp"
#include "actmap/grid.hpp"

namespace actmap {

/// Largest accepted layer count. Keeps every activity value (at most L+1)
/// representable in 32 bits and keeps the sentinel arithmetic of the
/// reference kernel strictly negative at obstacle cells.
inline constexpr std::uint32_t kMaxLayers =
    static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max()) - 1;

/// Batched: one call runs all layers over an internal buffer pair with no
/// per-layer hand-off. Iterative: one kernel call per layer, each returning
/// a fresh map. Outputs are bit-identical; only the call granularity and
/// copy traffic differ.
enum class Mode { kBatched, kIterative };

struct PropagationConfig {
  /// Explicit layer count; nullopt selects auto mode.
  std::optional<std::uint32_t> layers;
  Mode mode = Mode::kBatched;
  /// Safety limit for auto mode.
  std::uint32_t auto_cap = 1;
  /// Worker threads for the sweep; results are identical for any count.
  unsigned threads = 1;
};

/// One propagation step: 3x3 max over the Chebyshev neighborhood with zero
/// padding, +1 at source cells, forced zero at obstacles. Pure function of
/// its inputs. Rejects dimension mismatches.
ActivityMap propagate_layer(const ActivityMap& activity, const GridMap& grid,
                            const SourceSet& sources, unsigned threads = 1);

/// L >= 1 applications of the layer step starting from the source map.
ActivityMap propagate(const GridMap& grid, const SourceSet& sources,
                      std::uint32_t layers, Mode mode = Mode::kBatched,
                      unsigned threads = 1);

enum class AutoStop {
  kFilled,      // no free cell is zero
  kStalled,     // the zero set stopped shrinking (unreachable cells remain)
  kCapReached,  // auto_cap layers applied without meeting either condition
};

struct AutoResult {
  ActivityMap map;
  std::uint32_t layers_used;
  AutoStop cause;
};

/// Adds layers until the map has no zero-valued free cells, the zero set
/// stops shrinking, or auto_cap is hit. Cap exhaustion is a reported
/// outcome, not an error.
AutoResult propagate_auto(const GridMap& grid, const SourceSet& sources,
                          std::uint32_t auto_cap, unsigned threads = 1);

/// Literal signed formulation: obstacles carry the most-negative 32-bit
/// sentinel, re-added every layer before rectification. Kept deliberately
/// independent of the production kernel; bit-exact equal to propagate() for
/// all valid inputs.
ActivityMap propagate_reference(const GridMap& grid, const SourceSet& sources,
                                std::uint32_t layers);

struct LayerBound {
  /// Longest-corridor bound: max(n,m) * ((min(n,m)+1)/2) + min(n,m)/2,
  /// integer division. Counts corridor cells of the serpentine worst case.
  std::uint64_t worst_case;
  /// Practical band: ceil(1.5 * max-dim) .. 2 * max-dim.
  std::uint32_t heuristic_low;
  std::uint32_t heuristic_high;
};

LayerBound layer_bound(const GridMap& grid);

}  // namespace actmap
