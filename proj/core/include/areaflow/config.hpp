#pragma once

// Run configuration, read from YAML text.
//
//   n: 256
//   seed: 7
//   sample_interval: 0.1
//   output_dir: out
//   snapshot_count: 5
//   shape:                 # or the one-line form  shape: "ellipse a=2 b=1"
//     kind: ellipse        # circle{R} | ellipse{a, b} | fourier{r0, harmonics} | raw{kappa}
//     a: 2
//     b: 1
//   stepper:
//     cfl: 0.5
//     stencil_order: 2
//     projection_period: 100
//     t_max: 60
//     stop_uniformity: 1e-12
//     stop_deficit: 0
//   tolerances:
//     area_conservation: 1e-6
//
// Fourier harmonics are listed as [k, a_k, b_k] triples with k >= 2.

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "areaflow/curve_model.hpp"
#include "areaflow/diagnostics.hpp"
#include "areaflow/solver.hpp"

namespace areaflow {

/// Environment variable that overrides `output_dir`.
inline constexpr const char* kOutputDirEnv = "AREAFLOW_OUTPUT_DIR";

struct RunConfig {
  ShapeSpec shape = CircleShape{1.0};
  std::size_t n = 256;
  StepperConfig stepper;
  double sample_interval = 0.1;
  std::filesystem::path output_dir = "areaflow-out";
  ToleranceTable tolerances;
  std::uint64_t seed = 0;
  std::size_t snapshot_count = 5;
};

/// Parses and validates; unknown keys are rejected. Throws ConfigError with
/// the 1-based line number for syntax errors and the field name otherwise.
RunConfig load_config(std::string_view text);

RunConfig load_config_file(const std::filesystem::path& path);

/// A bare `tolerances` mapping (or a document with a `tolerances:` section).
ToleranceTable load_tolerances(std::string_view text);

}  // namespace areaflow
