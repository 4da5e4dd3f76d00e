#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace areaflow::cli {

enum ExitCode : int { kAllPass = 0, kClaimFailed = 1, kError = 2 };

/// Runs the flow described by the config file and writes every artifact
/// into the output directory (the environment variable wins over the config).
int cmd_run(const std::filesystem::path& config, const std::optional<std::filesystem::path>& output_dir,
            std::ostream& out, std::ostream& err);

/// Re-verifies an existing time series. The JSON report is written to
/// `report_path` when given.
int cmd_report(const std::filesystem::path& timeseries, const std::optional<std::filesystem::path>& tolerances,
               const std::optional<std::filesystem::path>& report_path, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace areaflow::cli
