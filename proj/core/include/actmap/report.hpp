#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "actmap/bench.hpp"
#include "actmap/propagate.hpp"
#include "actmap/reconstruct.hpp"
#include "actmap/validate.hpp"

namespace actmap {

enum class Method { kSimple, kEuclidean };

struct SceneSummary {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint64_t obstacles = 0;
  std::uint64_t sources = 0;
  std::uint64_t targets = 0;
};

struct RunConfig {
  std::optional<std::uint32_t> layers;  // nullopt = auto
  std::uint32_t auto_cap = 0;
  Mode mode = Mode::kBatched;
  Method method = Method::kEuclidean;
  std::uint64_t seed = 0;
  CornerRule corner_rule = CornerRule::kStrict;
  unsigned threads = 1;
};

struct TargetReport {
  Coord target;
  bool covered = false;
  std::optional<Coord> reached_source;
  std::uint64_t steps = 0;
  double euclidean_length = 0.0;
  std::vector<Coord> points;  // empty when point emission is off
};

struct ModeComparison {
  double batched_median_ms = 0.0;
  double iterative_median_ms = 0.0;
  double ratio = 0.0;  // iterative / batched
};

struct BenchReport {
  std::vector<BenchSample> samples;
  std::optional<ScalingFit> fit;
  std::optional<ModeComparison> mode_compare;
};

struct Timings {
  double parse_ms = 0.0;
  double propagate_ms = 0.0;
  double reconstruct_ms = 0.0;
  double validate_ms = 0.0;
  double total_ms = 0.0;
};

/// Machine-readable record of one plan/validate/bench invocation. The JSON
/// serialization has a fixed field order and a schema_version field, and is
/// byte-stable across identical runs except for the timing block (and bench
/// medians, which are themselves timings).
struct RunReport {
  int schema_version = 1;
  std::string command;  // plan | validate | bench
  SceneSummary scene;
  RunConfig config;

  std::uint32_t layers_used = 0;
  std::string termination;  // filled | stalled | cap | fixed
  std::uint32_t max_activity = 0;
  std::optional<LayerBound> bounds;
  std::vector<TargetReport> paths;
  std::optional<ValidationReport> validation;
  std::optional<BenchReport> bench;

  Timings timing;
};

std::string serialize_run_report(const RunReport& report);

/// Inverse of serialize_run_report; rejects unknown schema versions.
RunReport parse_run_report(std::string_view text);

}  // namespace actmap
