#include "zenith/scatter.hpp"

#include <cmath>
#include <string>

#include "zenith/constants.hpp"
#include "zenith/errors.hpp"

namespace zenith {

std::string_view aerosol_kind_name(AerosolKind kind) {
    switch (kind) {
        case AerosolKind::none: return "none";
        case AerosolKind::rural: return "rural";
        case AerosolKind::maritime: return "maritime";
        case AerosolKind::urban: return "urban";
        case AerosolKind::tropospheric: return "tropospheric";
    }
    throw ContractError("unknown aerosol kind");
}

AerosolKind aerosol_kind_from_name(std::string_view name) {
    if (name == "none") return AerosolKind::none;
    if (name == "rural") return AerosolKind::rural;
    if (name == "maritime") return AerosolKind::maritime;
    if (name == "urban") return AerosolKind::urban;
    if (name == "tropospheric") return AerosolKind::tropospheric;
    throw DomainError("unknown aerosol kind '" + std::string(name) +
                      "' (expected none|rural|maritime|urban|tropospheric)");
}

AerosolModel default_aerosol(AerosolKind kind) {
    switch (kind) {
        case AerosolKind::none: return {AerosolKind::none, 0.0, 0.0, 0.6};
        case AerosolKind::rural: return {AerosolKind::rural, 0.20, 1.3, 0.6};
        case AerosolKind::maritime: return {AerosolKind::maritime, 0.135, 0.5, 0.6};
        case AerosolKind::urban: return {AerosolKind::urban, 0.195, 1.1, 0.6};
        case AerosolKind::tropospheric:
            return {AerosolKind::tropospheric, 0.175, 1.5, 0.6};
    }
    throw ContractError("unknown aerosol kind");
}

std::vector<double> rayleigh_od(const SpectralGrid& grid, double p_surface_atm) {
    if (p_surface_atm < 0.0) throw DomainError("surface pressure must be non-negative");

    std::vector<double> tau(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double lambda_um = grid.wavelength(i) * 1e-3;
        const double inv2 = 1.0 / (lambda_um * lambda_um);
        const double inv4 = inv2 * inv2;
        tau[i] = 0.008569 * inv4 * (1.0 + 0.0113 * inv2 + 0.00013 * inv4) * p_surface_atm;
    }
    return tau;
}

std::vector<double> aerosol_od(const AerosolModel& model, const SpectralGrid& grid,
                               double rh) {
    if (!(rh >= 0.0 && rh < 1.0))
        throw DomainError("aerosol humidity growth needs rh in [0, 1); got " +
                          std::to_string(rh));
    if (model.beta_550 < 0.0) throw DomainError("aerosol beta_550 must be non-negative");
    if (model.kind == AerosolKind::none && model.beta_550 != 0.0)
        throw DomainError("aerosol kind 'none' requires beta_550 = 0");

    std::vector<double> tau(grid.size(), 0.0);
    if (model.kind == AerosolKind::none) return tau;

    const double growth = std::pow(1.0 - rh, -model.rh_growth_exponent);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double lambda_nm = grid.wavelength(i);
        tau[i] = model.beta_550 * std::pow(lambda_nm / 550.0, -model.angstrom) * growth;
    }
    return tau;
}

double cloud_od(const CloudLayer& cloud) {
    if (cloud.lwc_g_m3 < 0.0) throw DomainError("cloud LWC must be non-negative");
    if (!(cloud.reff_um > 0.0)) throw DomainError("cloud r_eff must be positive");
    if (!(cloud.thickness_m > 0.0)) throw DomainError("cloud thickness must be positive");

    const double lwp_kg_m2 = cloud.lwc_g_m3 * 1e-3 * cloud.thickness_m;
    const double reff_m = cloud.reff_um * 1e-6;
    return 3.0 * lwp_kg_m2 / (2.0 * constants::water_density_kg_m3 * reff_m);
}

}  // namespace zenith
