#include "zenith/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zenith/constants.hpp"
#include "zenith/errors.hpp"
#include "zenith/voigt.hpp"

namespace zenith {

namespace k = constants;

double doppler_hwhm(double nu0_cm1, double temperature_K, double mass_kg) {
    if (!(nu0_cm1 > 0.0 && temperature_K > 0.0 && mass_kg > 0.0))
        throw DomainError("doppler_hwhm: all inputs must be positive");
    const double thermal_speed =
        std::sqrt(2.0 * k::ln2 * k::k_boltzmann * temperature_K / mass_kg);
    return nu0_cm1 / k::c_m_s * thermal_speed;
}

double lorentz_hwhm(const LineRecord& line, const ThermoState& state) {
    const double p_air = state.pressure_atm - state.self_pressure_atm;
    return std::pow(k::t_ref_K / state.temperature_K, line.n_air) *
           (line.gamma_air * p_air + line.gamma_self * state.self_pressure_atm);
}

double line_strength(const LineRecord& line, double temperature_K, double q_exponent) {
    if (!(temperature_K > 0.0))
        throw DomainError("line_strength: temperature must be positive");
    const double t = temperature_K;
    const double partition = std::pow(k::t_ref_K / t, q_exponent);  // Q(Tref)/Q(T)
    const double boltzmann = std::exp(-k::c2_cm_K * line.e_lower_cm1 / t) /
                             std::exp(-k::c2_cm_K * line.e_lower_cm1 / k::t_ref_K);
    const double stimulated = (1.0 - std::exp(-k::c2_cm_K * line.nu0_cm1 / t)) /
                              (1.0 - std::exp(-k::c2_cm_K * line.nu0_cm1 / k::t_ref_K));
    return line.s_ref * partition * boltzmann * stimulated;
}

namespace {

void validate_state(const ThermoState& state) {
    if (!(state.temperature_K > 0.0))
        throw DomainError("thermo state: temperature must be positive");
    if (!(state.self_pressure_atm >= 0.0 &&
          state.self_pressure_atm <= state.pressure_atm))
        throw DomainError("thermo state: need 0 <= p_self <= p");
    if (!(state.molecular_mass_kg > 0.0))
        throw DomainError("thermo state: molecular mass must be positive");
}

// Everything one line needs, precomputed once per (line, state).
struct LineTerm {
    double center;     // shifted center nu0 + delta_air * p
    double amplitude;  // S(T) * abundance * sqrt(ln2/pi) / alpha_d
    double x_scale;    // sqrt(ln2) / alpha_d
    double y;          // sqrt(ln2) * gamma_l / alpha_d
};

std::vector<LineTerm> prepare_terms(const LineList& lines, const ThermoState& state,
                                    const CrossSectionOptions& opt) {
    std::vector<LineTerm> terms;
    terms.reserve(lines.records.size());
    for (const LineRecord& rec : lines.records) {
        const double alpha_d =
            doppler_hwhm(rec.nu0_cm1, state.temperature_K, state.molecular_mass_kg);
        const double gamma_l = lorentz_hwhm(rec, state);
        LineTerm t;
        t.center = rec.nu0_cm1 + rec.delta_air * state.pressure_atm;
        t.amplitude = line_strength(rec, state.temperature_K, opt.q_exponent) *
                      opt.abundance * k::sqrt_ln2_over_pi / alpha_d;
        t.x_scale = k::sqrt_ln2 / alpha_d;
        t.y = k::sqrt_ln2 * gamma_l / alpha_d;
        terms.push_back(t);
    }
    // Pressure shifts can reorder nearby lines; accumulation order is the
    // shifted-center order in both kernels.
    std::stable_sort(terms.begin(), terms.end(),
                     [](const LineTerm& a, const LineTerm& b) { return a.center < b.center; });
    return terms;
}

inline void accumulate_line(const LineTerm& t, std::span<const double> nus,
                            std::size_t begin, std::size_t end, double* sigma) {
    for (std::size_t i = begin; i < end; ++i) {
        const double x = (nus[i] - t.center) * t.x_scale;
        sigma[i] += t.amplitude * voigt_k(x, t.y);
    }
}

}  // namespace

CrossSection cross_section_reference(const LineList& lines, const SpectralGrid& grid,
                                     const ThermoState& state,
                                     const CrossSectionOptions& opt) {
    validate_state(state);
    CrossSection cs;
    cs.sigma.assign(grid.size(), 0.0);

    const auto terms = prepare_terms(lines, state, opt);
    const auto nus = grid.wavenumbers();
    for (const LineTerm& t : terms) {
        const std::size_t begin = grid.lower_index(t.center - wing_cutoff_cm1);
        const std::size_t end = grid.upper_index(t.center + wing_cutoff_cm1);
        accumulate_line(t, nus, begin, end, cs.sigma.data());
    }
    return cs;
}

CrossSection cross_section(const LineList& lines, const SpectralGrid& grid,
                           const ThermoState& state, const CrossSectionOptions& opt) {
    validate_state(state);
    CrossSection cs;
    cs.sigma.assign(grid.size(), 0.0);

    const auto terms = prepare_terms(lines, state, opt);
    if (terms.empty()) return cs;

    std::vector<double> centers;
    centers.reserve(terms.size());
    for (const LineTerm& t : terms) centers.push_back(t.center);

    const auto nus = grid.wavenumbers();
    constexpr std::size_t chunk = 2048;
    const auto n_chunks =
        static_cast<long long>((grid.size() + chunk - 1) / chunk);

#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < n_chunks; ++c) {
        const std::size_t i0 = static_cast<std::size_t>(c) * chunk;
        const std::size_t i1 = std::min(i0 + chunk, grid.size());
        const double nu_a = nus[i0];
        const double nu_b = nus[i1 - 1];

        const auto first = std::lower_bound(centers.begin(), centers.end(),
                                            nu_a - wing_cutoff_cm1);
        const auto last =
            std::upper_bound(centers.begin(), centers.end(), nu_b + wing_cutoff_cm1);
        for (auto it = first; it != last; ++it) {
            const LineTerm& t = terms[static_cast<std::size_t>(it - centers.begin())];
            const std::size_t begin =
                std::max(i0, grid.lower_index(t.center - wing_cutoff_cm1));
            const std::size_t end =
                std::min(i1, grid.upper_index(t.center + wing_cutoff_cm1));
            if (begin < end) accumulate_line(t, nus, begin, end, cs.sigma.data());
        }
    }
    return cs;
}

}  // namespace zenith
