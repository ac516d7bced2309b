#include <cmath>
#include <fstream>
#include <string>

#include "zenith/atmosphere.hpp"
#include "zenith/constants.hpp"
#include "zenith/errors.hpp"
#include "zenith/scenario.hpp"

namespace zenith {
namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return in;
}

double molecule_mass(const MoleculeSpec& mol) {
    if (mol.mass_kg > 0.0) return mol.mass_kg;
    switch (mol.molecule_id) {
        case 1: return constants::mass_h2o_kg;
        case 7: return constants::mass_o2_kg;
        default:
            throw DomainError("no built-in mass for molecule " +
                              std::to_string(mol.molecule_id) + "; set mass_kg");
    }
}

std::string molecule_label(int molecule_id) {
    switch (molecule_id) {
        case 1: return "molecular:h2o";
        case 7: return "molecular:o2";
        default: return "molecular:mol" + std::to_string(molecule_id);
    }
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;  // already carries source and line
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& err) {
        throw StageError(name, err.what());
    }
}

}  // namespace

MemberReport run_scenario(const ScenarioConfig& config, const RunOptions& options) {
    MemberReport report;
    report.id = config.id;
    report.primary_window = config.primary_window;
    report.secondary_window = config.secondary_window;

    report.grid = stage("grid", [&] {
        const double resolution =
            options.resolution_override_cm1.value_or(config.grid.resolution_cm1);
        return SpectralGrid::make(config.grid.lambda_min_nm, config.grid.lambda_max_nm,
                                  resolution);
    });
    const SpectralGrid& grid = report.grid;

    AtmosphereProfile profile = stage("profile", [&] {
        auto in = open_input(config.profile_path);
        return AtmosphereProfile::from_stream(in, config.profile_path);
    });
    profile = stage("modifiers", [&] {
        AtmosphereProfile p = std::move(profile);
        if (config.surface_temperature_c)
            p = set_surface_temperature(p, *config.surface_temperature_c + 273.15);
        if (config.constant_rh) p = set_constant_rh(p, *config.constant_rh);
        p.validate();
        return p;
    });

    const ResampledSolar solar = stage("solar", [&] {
        auto in = open_input(config.solar_path);
        return resample_solar(SolarSpectrum::parse(in, config.solar_path), grid);
    });

    OpticalDepthStack taus(grid.size());

    for (const MoleculeSpec& mol : config.lines) {
        const LineList lines = stage("lines", [&] {
            LineFilter filter;
            filter.molecule_id = mol.molecule_id;
            filter.nu_lo_cm1 = grid.nu_min();
            filter.nu_hi_cm1 = grid.nu_max();
            filter.strength_floor = mol.strength_floor;
            filter.lenient = options.lenient_parsing;
            auto in = open_input(mol.path);
            return load_line_list(in, filter, mol.path);
        });

        stage("absorption", [&] {
            const double mass = molecule_mass(mol);
            std::vector<CrossSection> per_layer;
            per_layer.reserve(profile.layers().size());
            CrossSectionOptions xs_opt;
            xs_opt.q_exponent = mol.q_exponent;
            xs_opt.abundance = mol.abundance;

            std::vector<double> columns;
            if (mol.vmr) {
                columns = column_amount(profile, Species::air);
                for (double& c : columns) c *= *mol.vmr;
            } else if (mol.molecule_id == 1) {
                columns = column_amount(profile, Species::h2o);
            } else {
                throw DomainError("molecule " + std::to_string(mol.molecule_id) +
                                  " needs an explicit vmr");
            }

            for (const Layer& layer : profile.layers()) {
                ThermoState state;
                state.temperature_K = layer.temperature_K;
                state.pressure_atm = layer.pressure_atm;
                if (mol.vmr)
                    state.self_pressure_atm = layer.pressure_atm * *mol.vmr;
                else
                    state.self_pressure_atm =
                        layer.n_air_cm3 > 0.0
                            ? layer.pressure_atm * layer.n_h2o_cm3 / layer.n_air_cm3
                            : 0.0;
                state.molecular_mass_kg = mass;
                per_layer.push_back(cross_section(lines, grid, state, xs_opt));
            }
            taus.add(molecule_label(mol.molecule_id), molecular_od(per_layer, columns));
            return 0;
        });
    }

    stage("stack", [&] {
        taus.add("rayleigh", rayleigh_od(grid, profile.surface_pressure_atm()));
        if (config.aerosol.kind != AerosolKind::none) {
            const double rh =
                config.aerosol_rh_coupling ? config.constant_rh.value_or(0.0) : 0.0;
            taus.add("aerosol", aerosol_od(config.aerosol, grid, rh));
        }
        for (std::size_t i = 0; i < config.clouds.size(); ++i) {
            taus.add("cloud:" + std::to_string(i + 1),
                     std::vector<double>(grid.size(), cloud_od(config.clouds[i])));
        }
        return 0;
    });

    report.spectrum = stage("transmittance", [&] { return total_transmittance(taus); });
    report.spectrum.scenario_id = config.id;

    report.irradiance_W_m2_nm = stage("irradiance", [&] {
        return direct_irradiance(report.spectrum, solar.irradiance_W_m2_nm);
    });
    report.solar_gap = solar.gap;

    stage("statistics", [&] {
        report.primary = band_mean(report.spectrum, grid, config.primary_window.lo_nm,
                                   config.primary_window.hi_nm);
        report.secondary = band_mean(report.spectrum, grid, config.secondary_window.lo_nm,
                                     config.secondary_window.hi_nm);
        return 0;
    });

    stage("budget", [&] {
        report.atmospheric_db = loss_db(report.primary.mean);
        report.underflow = report.primary.mean < zero_band_mean_threshold;
        report.budget.atmospheric_db = report.atmospheric_db;
        report.verdict = classify(report.budget);
        return 0;
    });

    return report;
}

ScenarioReport run_members(const std::string& scenario_id,
                           const std::vector<ScenarioConfig>& members,
                           const RunOptions& options) {
    ScenarioReport report;
    report.scenario_id = scenario_id;
    report.members.reserve(members.size());
    for (const ScenarioConfig& member : members)
        report.members.push_back(run_scenario(member, options));
    return report;
}

}  // namespace zenith
