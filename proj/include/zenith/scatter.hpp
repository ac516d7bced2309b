#pragma once

#include <string_view>
#include <vector>

#include "zenith/spectral_grid.hpp"

namespace zenith {

enum class AerosolKind { none, rural, maritime, urban, tropospheric };

std::string_view aerosol_kind_name(AerosolKind kind);
AerosolKind aerosol_kind_from_name(std::string_view name);

/// Angstrom-law aerosol column: tau(lambda) = beta (lambda/550nm)^-alpha,
/// optionally grown by (1-rh)^-gamma_h in humid scenarios.
struct AerosolModel {
    AerosolKind kind = AerosolKind::none;
    double beta_550 = 0.0;            // optical depth at 550 nm
    double angstrom = 0.0;            // Angstrom exponent
    double rh_growth_exponent = 0.6;  // hygroscopic growth exponent

    bool operator==(const AerosolModel&) const = default;
};

/// Shipped per-kind defaults. The four non-trivial kinds are calibrated to
/// give nearly equal visible-window transmissivity while keeping distinct
/// spectral slopes; all values are configuration and can be overridden per
/// scenario.
AerosolModel default_aerosol(AerosolKind kind);

/// Geometrically thin cloud: gray extinction from liquid water path.
struct CloudLayer {
    double base_km = 2.0;
    double lwc_g_m3 = 1.0;      // liquid water content
    double reff_um = 10.0;      // effective droplet radius
    double thickness_m = 38.4;  // default calibrated so two clouds ~ 1e-5

    bool operator==(const CloudLayer&) const = default;
};

/// Whole-column Rayleigh optical depth per grid point, Hansen-Travis fit
/// scaled by surface pressure:
/// tau = 0.008569 l^-4 (1 + 0.0113 l^-2 + 0.00013 l^-4) p, l in um.
std::vector<double> rayleigh_od(const SpectralGrid& grid, double p_surface_atm);

/// Aerosol optical depth per grid point. rh must be in [0,1); rh = 1 makes
/// the growth factor singular and is a domain error.
std::vector<double> aerosol_od(const AerosolModel& model, const SpectralGrid& grid,
                               double rh);

/// Gray cloud optical depth: 3 LWP / (2 rho_w r_eff), extinction
/// efficiency 2 in the geometric-optics limit.
double cloud_od(const CloudLayer& cloud);

}  // namespace zenith
