#pragma once

// Physical constants shared by every module. CODATA 2018 where exact.
namespace zenith::constants {

inline constexpr double c_m_s = 2.99792458e8;         // speed of light [m/s]
inline constexpr double k_boltzmann = 1.380649e-23;   // [J/K]
inline constexpr double c2_cm_K = 1.438777;           // second radiation constant [cm K]
inline constexpr double t_ref_K = 296.0;              // spectroscopic reference temperature
inline constexpr double p_ref_atm = 1.0;              // reference pressure
inline constexpr double atm_Pa = 101325.0;            // 1 atm in Pa
inline constexpr double water_density_kg_m3 = 1000.0;

inline constexpr double ln2 = 0.6931471805599453;
inline constexpr double sqrt_ln2 = 0.8325546111576977;
inline constexpr double sqrt_pi = 1.7724538509055160;
inline constexpr double sqrt_ln2_over_pi = 0.46971863934982566;  // sqrt(ln2/pi)

// Molecular masses [kg] for the species the simulator knows out of the box.
inline constexpr double mass_h2o_kg = 2.991e-26;
inline constexpr double mass_o2_kg = 5.313e-26;

}  // namespace zenith::constants
