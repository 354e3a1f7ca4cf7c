#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "actmap/propagate.hpp"

namespace actmap {

struct BenchSample {
  std::uint32_t n = 0;       // linear grid size (n x n cells)
  std::uint32_t layers = 0;  // L
  Mode mode = Mode::kBatched;
  unsigned threads = 1;
  std::uint32_t repeats = 0;
  double median_ms = 0.0;
  double min_ms = 0.0;
  bool skipped = false;  // allocation failure at this size
};

/// Layer count per grid size: a fixed L, or ratio * n.
struct LayerRule {
  std::optional<std::uint32_t> fixed;
  double ratio = 1.0;

  std::uint32_t layers_for(std::uint32_t n) const;
};

/// Times propagate() on empty n x n maps with a centered source (the
/// operation count does not depend on obstacles). One warm-up run is
/// excluded; medians and minima over `repeats` timed runs are reported.
/// Sizes must be >= 16 and repeats >= 3. Allocation failures mark the
/// sample skipped and the run continues.
std::vector<BenchSample> run_benchmark(std::span<const std::uint32_t> sizes,
                                       LayerRule rule, Mode mode,
                                       unsigned threads,
                                       std::uint32_t repeats);

/// Least-squares scaling fit. The combined coefficient c models
/// t = c * L * n^2 over all samples; per-axis slopes are present when at
/// least three samples share an L (slope vs n^2) or an n (slope vs L).
struct ScalingFit {
  std::optional<double> slope_vs_nodes;   // ms per cell at the common L
  std::optional<double> slope_vs_layers;  // ms per layer at the common n
  double coefficient = 0.0;               // c in t = c * L * n^2
  double max_rel_residual = 0.0;
};

/// Rejects inputs with fewer than three usable samples.
ScalingFit fit_scaling(std::span<const BenchSample> samples);

}  // namespace actmap
