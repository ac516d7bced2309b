#pragma once

#include <vector>

#include "zenith/hitran.hpp"
#include "zenith/spectral_grid.hpp"

namespace zenith {

/// Thermodynamic state of one atmospheric layer as seen by the absorber.
struct ThermoState {
    double temperature_K = 296.0;
    double pressure_atm = 1.0;       // total pressure
    double self_pressure_atm = 0.0;  // partial pressure of the absorber
    double molecular_mass_kg = 0.0;
};

/// Per-grid-point absorption cross section [cm^2 / molecule].
struct CrossSection {
    std::vector<double> sigma;
};

/// Lines contribute only within this distance of their shifted center.
inline constexpr double wing_cutoff_cm1 = 25.0;

/// Doppler half width at half maximum: (nu0/c) sqrt(2 ln2 kB T / m).
double doppler_hwhm(double nu0_cm1, double temperature_K, double mass_kg);

/// Pressure-broadened HWHM:
/// (T_ref/T)^n_air * (gamma_air (p - p_self) + gamma_self p_self).
double lorentz_hwhm(const LineRecord& line, const ThermoState& state);

/// Line intensity at temperature T. The partition function is approximated
/// as Q(T) ~ T^q (q = 1.5 default, configurable per molecule).
double line_strength(const LineRecord& line, double temperature_K,
                     double q_exponent = 1.5);

/// Options for the cross-section kernel.
struct CrossSectionOptions {
    double q_exponent = 1.5;
    double abundance = 1.0;  // isotopologue abundance scalar applied to S
};

/// Voigt line-by-line cross section on the grid. Lines are visited in
/// ascending shifted-center order and only the grid points inside the
/// +-25 cm^-1 window of each line are touched, so runtime scales with
/// lines x window points, not lines x grid.
///
/// The parallel kernel partitions the grid into fixed chunks; every point
/// still accumulates its lines in the same order as the serial reference,
/// so the two are bit-identical for any thread count.
CrossSection cross_section(const LineList& lines, const SpectralGrid& grid,
                           const ThermoState& state,
                           const CrossSectionOptions& opt = {});

/// Serial line-major reference implementation, kept for testing and as the
/// benchmark baseline.
CrossSection cross_section_reference(const LineList& lines, const SpectralGrid& grid,
                                     const ThermoState& state,
                                     const CrossSectionOptions& opt = {});

}  // namespace zenith
