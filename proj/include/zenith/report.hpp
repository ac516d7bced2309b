#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "zenith/scenario.hpp"

namespace zenith {

/// Shortest round-trip decimal rendering (std::to_chars); the one float
/// format used in every emitted file so reruns are byte-identical.
std::string format_double(double value);

struct EmitOptions {
    /// Written into file headers; pass a fixed string for reproducible
    /// output, empty for the current UTC time.
    std::string timestamp;
};

/// Writes one spectrum CSV per member, a summary JSON and one long-format
/// plot-data CSV into dir (created if missing). Returns the paths written.
std::vector<std::filesystem::path> emit_report(const ScenarioReport& report,
                                               const std::filesystem::path& dir,
                                               const EmitOptions& options = {});

}  // namespace zenith
