#pragma once

#include <istream>
#include <string>
#include <vector>

namespace zenith {

/// One homogeneous slab of atmosphere.
struct Layer {
    double z_lo_km = 0.0;
    double z_hi_km = 0.0;
    double temperature_K = 0.0;
    double pressure_atm = 0.0;
    double n_air_cm3 = 0.0;   // air number density [molecule cm^-3]
    double n_h2o_cm3 = 0.0;   // water-vapour number density [molecule cm^-3]

    double midpoint_km() const noexcept { return 0.5 * (z_lo_km + z_hi_km); }
    bool operator==(const Layer&) const = default;
};

/// Altitude below which the scenario modifiers act. Layers are classified by
/// midpoint: a layer whose midpoint is at or above the boundary is untouched.
inline constexpr double modifier_top_km = 15.0;

/// Layered atmospheric state from ground to top of atmosphere.
///
/// Built from a level file (one `z_km p_atm T_K n_air_cm3 n_h2o_cm3` row per
/// level, ground first); consecutive levels are averaged into layers.
class AtmosphereProfile {
public:
    static AtmosphereProfile from_stream(std::istream& in, std::string provenance);

    const std::vector<Layer>& layers() const noexcept { return layers_; }
    double surface_temperature_K() const noexcept { return surface_t_; }
    double surface_pressure_atm() const noexcept { return surface_p_; }
    /// Temperature of the original level data interpolated at 15 km; the
    /// anchor the surface-temperature modifier ramps toward.
    double t15_K() const noexcept { return t15_; }
    const std::string& provenance() const noexcept { return provenance_; }

    /// Re-checks every invariant (contiguity, ground at 0, top >= 50 km,
    /// non-increasing pressure, per-layer bounds). Throws ContractError.
    void validate() const;

    /// Assembles a profile from already-built layers (test and modifier
    /// path). Invariants are validated.
    static AtmosphereProfile from_layers(std::vector<Layer> layers, double surface_t,
                                         double surface_p, double t15,
                                         std::string provenance);

private:
    AtmosphereProfile() = default;

    std::vector<Layer> layers_;
    double surface_t_ = 0.0;
    double surface_p_ = 0.0;
    double t15_ = 0.0;
    std::string provenance_;
};

/// Paper sweep bounds for the surface-temperature modifier.
inline constexpr double sweep_t0_min_K = 263.15;
inline constexpr double sweep_t0_max_K = 303.15;

/// Re-anchors the temperature ramp: layers below 15 km (by midpoint) get
/// T(z) interpolated linearly from the new T0 at ground to the unchanged
/// T15; their air density is rescaled by T_old/T_new (perfect gas at fixed
/// pressure). Layers at or above 15 km are returned bit-identical.
///
/// T0 outside the paper sweep range [263.15, 303.15] K is a domain error
/// unless allow_outside_sweep is set.
AtmosphereProfile set_surface_temperature(const AtmosphereProfile& profile,
                                          double t0_K,
                                          bool allow_outside_sweep = false);

/// Magnus saturation vapour pressure over liquid water [Pa];
/// valid for 180 K < T < 330 K.
double saturation_vapor_pressure(double temperature_K);

/// Sets constant relative humidity (0..1) in all layers below 15 km:
/// n_h2o = rh * e_s(T) / (kB T), clamped to n_air. Layers above 15 km are
/// returned bit-identical.
AtmosphereProfile set_constant_rh(const AtmosphereProfile& profile, double rh);

enum class Species { air, h2o };

/// Per-layer vertical column densities [molecule cm^-2]:
/// n * layer thickness (km -> cm).
std::vector<double> column_amount(const AtmosphereProfile& profile, Species species);

}  // namespace zenith
