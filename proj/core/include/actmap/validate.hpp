#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "actmap/oracle.hpp"
#include "actmap/propagate.hpp"

namespace actmap {

struct ValidationConfig {
  /// Explicit layer count; nullopt selects auto mode.
  std::optional<std::uint32_t> layers;
  std::uint32_t auto_cap = 1;
  unsigned threads = 1;
  CornerRule corner_rule = CornerRule::kStrict;
  /// Seeds used for the simple-reconstruction step-optimality check.
  std::vector<std::uint64_t> seeds = {0};
  /// Verify the reached source is hop-nearest (one BFS per target).
  bool check_nearest = false;
  /// Cross-check batched vs iterative vs reference kernels.
  bool check_kernels = true;
  /// Test hook: adds one to the named cell after propagation so the
  /// activity-law check must report it.
  std::optional<Coord> inject_fault;
};

struct TargetValidation {
  Coord target;
  bool covered = false;
  // simple reconstruction
  std::uint64_t simple_steps = 0;
  std::uint32_t bfs_hops = 0;
  bool step_optimal = true;
  bool nearest_ok_simple = true;
  // Euclidean reconstruction
  double euclidean_length = 0.0;
  double octile_distance = 0.0;
  double euclidean_excess = 0.0;
  bool excess_positive = false;
  bool octile_reachable = true;
  bool nearest_ok_euclidean = true;
};

struct ValidationReport {
  std::uint32_t layers_used = 0;
  AutoStop termination = AutoStop::kFilled;
  LayerBound bounds{};

  ActivityCheck activity;
  bool kernels_checked = false;
  bool kernels_equal = true;
  std::optional<Coord> kernel_mismatch;

  std::vector<TargetValidation> targets;
  std::uint64_t covered_targets = 0;
  std::uint64_t step_failures = 0;
  std::uint64_t positive_excess_count = 0;
  double max_excess = 0.0;
  std::uint64_t octile_unreachable_count = 0;
  std::uint64_t nearest_failures = 0;
  std::vector<std::string> findings;

  /// Exit-code contract: activity-law violations, step-optimality failures
  /// and kernel mismatches fail validation; excess and nearest-source
  /// disagreements are reported findings.
  bool passed() const {
    return activity.ok() && step_failures == 0 && kernels_equal;
  }
};

/// Propagates over the grid, reconstructs every target with both methods,
/// and checks everything against the breadth-first and octile oracles.
/// Targets on obstacles are rejected; uncovered targets are recorded, not
/// errors.
ValidationReport run_validation(const GridMap& grid, const SourceSet& sources,
                                std::span<const Coord> targets,
                                const ValidationConfig& config);

}  // namespace actmap
