#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "zenith/engine.hpp"
#include "zenith/linkbudget.hpp"
#include "zenith/scatter.hpp"
#include "zenith/solar.hpp"
#include "zenith/spectral_grid.hpp"

namespace zenith {

struct GridSpec {
    double lambda_min_nm = SpectralGrid::default_lambda_min_nm;
    double lambda_max_nm = SpectralGrid::default_lambda_max_nm;
    double resolution_cm1 = SpectralGrid::default_resolution_cm1;

    bool operator==(const GridSpec&) const = default;
};

struct WindowSpec {
    double lo_nm = 0.0;
    double hi_nm = 0.0;

    bool operator==(const WindowSpec&) const = default;
};

/// One molecular line file to load. vmr, when set, derives the absorber
/// column from air density (well-mixed gases like O2); otherwise molecule 1
/// uses the profile's water-vapour density.
struct MoleculeSpec {
    int molecule_id = 1;
    std::string path;
    double mass_kg = 0.0;  // 0 = look up by molecule id
    double q_exponent = 1.5;
    double strength_floor = 1e-28;
    double abundance = 1.0;
    std::optional<double> vmr;

    bool operator==(const MoleculeSpec&) const = default;
};

/// Declarative description of one simulation member.
struct ScenarioConfig {
    std::string id;
    std::string profile_path;
    std::string solar_path;
    GridSpec grid;
    std::optional<double> surface_temperature_c;  // paper sweep: -10..30
    std::optional<double> constant_rh;            // fraction, 0..1
    AerosolModel aerosol{AerosolKind::none, 0.0, 0.0, 0.6};
    bool aerosol_rh_coupling = false;  // feed constant_rh into aerosol growth
    std::vector<CloudLayer> clouds;
    std::vector<MoleculeSpec> lines;
    WindowSpec primary_window{700.0, 900.0};
    WindowSpec secondary_window{800.0, 1000.0};

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses the scenario config format (key = value lines, [aerosol] table,
/// repeated [[clouds]] / [[lines]] tables). Errors carry 1-based lines.
ScenarioConfig parse_config(std::istream& in, const std::string& source_name);

/// Canonical text form; parse_config(write_config(c)) == c.
std::string write_config(const ScenarioConfig& config);

/// Checks ranges and referenced-file existence relative to the current
/// directory; throws DomainError / ParseError on violations.
void validate_config(const ScenarioConfig& config);

inline constexpr const char* preset_names[] = {"aerosols", "temperature", "humidity",
                                               "clouds", "citydesert"};

/// Built-in experiment sweeps. data_dir is prefixed to the shipped fixture
/// paths. Unknown names raise DomainError listing the valid ones.
std::vector<ScenarioConfig> preset(const std::string& name,
                                   const std::string& data_dir = "data");

/// Band-mean transmittances below this threshold are reported as
/// zero-transmission (underflow) members.
inline constexpr double zero_band_mean_threshold = 1e-9;

struct MemberReport {
    std::string id;
    SpectralGrid grid;
    TransmittanceSpectrum spectrum;
    std::vector<double> irradiance_W_m2_nm;
    std::vector<std::uint8_t> solar_gap;
    BandMean primary;
    BandMean secondary;
    WindowSpec primary_window;
    WindowSpec secondary_window;
    double atmospheric_db = 0.0;  // from the primary-window band mean
    bool underflow = false;
    LossBudget budget;
    Verdict verdict = Verdict::insecure;
};

struct ScenarioReport {
    std::string scenario_id;
    std::vector<MemberReport> members;
};

struct RunOptions {
    std::optional<double> resolution_override_cm1;
    bool lenient_parsing = false;
};

/// Executes one member: profile -> modifiers -> per-layer cross sections ->
/// optical-depth stack -> transmittance -> irradiance -> statistics ->
/// budget -> verdict. Failures are StageErrors naming the pipeline stage.
MemberReport run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

/// Runs a member list in order and assembles the report.
ScenarioReport run_members(const std::string& scenario_id,
                           const std::vector<ScenarioConfig>& members,
                           const RunOptions& options = {});

}  // namespace zenith
