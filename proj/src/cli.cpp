#include "zenith/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zenith/errors.hpp"
#include "zenith/report.hpp"
#include "zenith/scenario.hpp"

namespace zenith::cli {
namespace {

constexpr const char* format_help = R"(File formats

Scenario config (.cfg)
  key = value lines; '#' comments. Strings are double-quoted, windows are
  [lo, hi]. Tables: [aerosol] once, [[clouds]] and [[lines]] repeated.
  Keys: id, profile, solar, lambda_min_nm, lambda_max_nm, resolution_cm1,
        primary_window_nm, secondary_window_nm,
        surface_temperature_c (optional, -10..30),
        constant_rh (optional, 0..1)
  [aerosol]: kind (none|rural|maritime|urban|tropospheric), beta_550,
             angstrom, rh_growth_exponent, rh_coupling (true feeds
             constant_rh into the aerosol growth factor)
  [[clouds]]: base_km, lwc_g_m3, reff_um, thickness_m
  [[lines]]:  molecule (HITRAN id), path, mass_kg, q_exponent,
              strength_floor, abundance, vmr (optional; derive the column
              from air density for well-mixed species)

Atmosphere profile
  One level per line: z_km p_atm T_K n_air_cm3 n_h2o_cm3; '#' comments;
  ground level first; altitude strictly increasing, pressure non-increasing.

Solar band file
  One band per line: lambda_lo_nm,lambda_hi_nm,irradiance_W_m2_nm;
  '#' comments; bands half-open [lo, hi), non-overlapping.

Molecular line list
  HITRAN 2004 fixed-width records, 160 characters per line. Columns
  (1-based): molecule 1-2, isotopologue 3, line center 4-15, intensity
  16-25, Einstein-A 26-35 (ignored), gamma_air 36-40, gamma_self 41-45,
  lower-state energy 46-55, n_air 56-59, delta_air 60-67; 68-160 carried
  opaquely.

Spectrum CSV (output)
  lambda_nm,wavenumber_cm1,transmittance,direct_irradiance_W_m2_nm,total_od
  ascending wavelength; '#' metadata header.

Exit codes: 0 success, 2 usage, 3 input/parse failure, 4 runtime failure.
)";

void print_member_summary(const MemberReport& m) {
    std::printf("%-18s T[%.0f-%.0f nm] = %-12.6g atm %.3f dB  total %.2f dB  %s%s\n",
                m.id.c_str(), m.primary_window.lo_nm, m.primary_window.hi_nm,
                m.primary.mean, m.atmospheric_db, m.budget.total_db(),
                std::string(verdict_name(m.verdict)).c_str(),
                m.underflow ? "  [zero-transmission]" : "");
}

int emit_and_summarize(const ScenarioReport& report, const std::filesystem::path& outdir,
                       const std::string& timestamp) {
    EmitOptions emit_opts;
    emit_opts.timestamp = timestamp;
    const auto files = emit_report(report, outdir, emit_opts);
    for (const MemberReport& m : report.members) print_member_summary(m);
    std::printf("wrote %zu files under %s\n", files.size(), outdir.string().c_str());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"zenith: zenith-path atmospheric transmissivity simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string preset_name;
    std::string outdir = "out";
    std::string data_dir = "data";
    std::string timestamp;
    double resolution = 0.0;
    bool lenient = false;

    auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", outdir, "output directory (default: out)");
        cmd->add_option("--resolution", resolution, "override grid resolution [cm^-1]");
        cmd->add_flag("--lenient", lenient, "skip unparsable line-list rows");
        cmd->add_option("--timestamp", timestamp,
                        "pin the timestamp written into output headers");
    };

    auto* cmd_run = app.add_subcommand("run", "run one scenario config");
    cmd_run->add_option("config", config_path, "scenario config file")->required();
    add_run_flags(cmd_run);

    auto* cmd_preset = app.add_subcommand("preset", "run a built-in experiment sweep");
    cmd_preset->add_option("name", preset_name,
                           "aerosols|temperature|humidity|clouds|citydesert")
        ->required();
    cmd_preset->add_option("--data-dir", data_dir, "fixture directory (default: data)");
    add_run_flags(cmd_preset);

    auto* cmd_validate = app.add_subcommand("validate", "check a config without running");
    cmd_validate->add_option("config", config_path, "scenario config file")->required();

    auto* cmd_formats = app.add_subcommand("formats", "describe the file formats");

    try {
        std::vector<const char*> argv;
        argv.push_back("zenith");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunOptions options;
    if (resolution > 0.0) options.resolution_override_cm1 = resolution;
    options.lenient_parsing = lenient;

    try {
        if (cmd_formats->parsed()) {
            std::fputs(format_help, stdout);
            return 0;
        }
        if (cmd_validate->parsed()) {
            std::ifstream in(config_path);
            if (!in) throw ParseError(config_path, 0, "cannot open file");
            const ScenarioConfig cfg = parse_config(in, config_path);
            validate_config(cfg);
            std::printf("%s: OK (id '%s')\n", config_path.c_str(), cfg.id.c_str());
            return 0;
        }
        if (cmd_run->parsed()) {
            std::ifstream in(config_path);
            if (!in) throw ParseError(config_path, 0, "cannot open file");
            const ScenarioConfig cfg = parse_config(in, config_path);
            validate_config(cfg);
            const ScenarioReport report = run_members(cfg.id, {cfg}, options);
            return emit_and_summarize(report, std::filesystem::path(outdir) / cfg.id,
                                      timestamp);
        }
        if (cmd_preset->parsed()) {
            const bool known =
                std::any_of(std::begin(preset_names), std::end(preset_names),
                            [&](const char* n) { return preset_name == n; });
            if (!known) {
                std::fprintf(stderr,
                             "unknown preset '%s'; valid names: aerosols, temperature, "
                             "humidity, clouds, citydesert\n",
                             preset_name.c_str());
                return 2;
            }
            const auto members = preset(preset_name, data_dir);
            const auto dir = std::filesystem::path(outdir) / preset_name;

            // Emit the member configs so sweeps can be edited and re-run.
            std::filesystem::create_directories(dir / "configs");
            for (const ScenarioConfig& member : members) {
                std::ofstream out(dir / "configs" / (member.id + ".cfg"), std::ios::binary);
                out << write_config(member);
            }

            for (const ScenarioConfig& member : members) validate_config(member);
            const ScenarioReport report = run_members(preset_name, members, options);
            return emit_and_summarize(report, dir, timestamp);
        }
        return 2;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}

}  // namespace zenith::cli
