#include "zenith/atmosphere.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "zenith/constants.hpp"
#include "zenith/errors.hpp"

namespace zenith {
namespace {

struct Level {
    double z_km, p_atm, t_K, n_air_cm3, n_h2o_cm3;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool next_token(std::string_view& rest, std::string_view& token) {
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
        rest.remove_prefix(1);
    if (rest.empty()) return false;
    std::size_t end = 0;
    while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') ++end;
    token = rest.substr(0, end);
    rest.remove_prefix(end);
    return true;
}

double parse_field(std::string_view token, const std::string& source, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(source, line, "not a number: '" + std::string(token) + "'");
    return value;
}

}  // namespace

void AtmosphereProfile::validate() const {
    if (layers_.empty()) throw ContractError("profile has no layers");
    if (layers_.front().z_lo_km != 0.0)
        throw ContractError("profile must start at ground (0 km)");
    if (layers_.back().z_hi_km < 50.0)
        throw ContractError("profile top must reach at least 50 km, got " +
                            std::to_string(layers_.back().z_hi_km));
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        const Layer& l = layers_[i];
        const std::string where = "layer " + std::to_string(i);
        if (!(l.z_lo_km < l.z_hi_km)) throw ContractError(where + ": inverted bounds");
        if (!(l.temperature_K > 0.0)) throw ContractError(where + ": non-positive T");
        if (l.pressure_atm < 0.0) throw ContractError(where + ": negative pressure");
        if (l.n_air_cm3 < 0.0 || l.n_h2o_cm3 < 0.0)
            throw ContractError(where + ": negative density");
        if (l.n_h2o_cm3 > l.n_air_cm3)
            throw ContractError(where + ": water density exceeds air density");
        if (i > 0) {
            if (layers_[i - 1].z_hi_km != l.z_lo_km)
                throw ContractError(where + ": layers not contiguous");
            if (l.pressure_atm > layers_[i - 1].pressure_atm)
                throw ContractError(where + ": pressure increases with altitude");
        }
    }
}

AtmosphereProfile AtmosphereProfile::from_layers(std::vector<Layer> layers,
                                                 double surface_t, double surface_p,
                                                 double t15, std::string provenance) {
    AtmosphereProfile profile;
    profile.layers_ = std::move(layers);
    profile.surface_t_ = surface_t;
    profile.surface_p_ = surface_p;
    profile.t15_ = t15;
    profile.provenance_ = std::move(provenance);
    profile.validate();
    return profile;
}

AtmosphereProfile AtmosphereProfile::from_stream(std::istream& in, std::string provenance) {
    std::vector<Level> levels;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view rest = trim(raw);
        if (rest.empty() || rest.front() == '#') continue;

        Level lv{};
        double* fields[] = {&lv.z_km, &lv.p_atm, &lv.t_K, &lv.n_air_cm3, &lv.n_h2o_cm3};
        for (double* f : fields) {
            std::string_view token;
            if (!next_token(rest, token))
                throw ParseError(provenance, line_no,
                                 "expected 5 fields: z_km p_atm T_K n_air_cm3 n_h2o_cm3");
            *f = parse_field(token, provenance, line_no);
        }
        if (!trim(rest).empty())
            throw ParseError(provenance, line_no, "trailing content after 5 fields");
        levels.push_back(lv);
    }
    if (levels.size() < 2)
        throw ParseError(provenance, 0, "profile needs at least 2 levels");

    for (std::size_t i = 1; i < levels.size(); ++i) {
        const std::string where = "level " + std::to_string(i + 1);
        if (!(levels[i].z_km > levels[i - 1].z_km))
            throw ParseError(provenance, 0, where + ": altitude not increasing");
        if (levels[i].p_atm > levels[i - 1].p_atm)
            throw ParseError(provenance, 0, where + ": pressure increasing with altitude");
    }

    std::vector<Layer> layers;
    layers.reserve(levels.size() - 1);
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        Layer layer;
        layer.z_lo_km = levels[i].z_km;
        layer.z_hi_km = levels[i + 1].z_km;
        layer.temperature_K = 0.5 * (levels[i].t_K + levels[i + 1].t_K);
        layer.pressure_atm = 0.5 * (levels[i].p_atm + levels[i + 1].p_atm);
        layer.n_air_cm3 = 0.5 * (levels[i].n_air_cm3 + levels[i + 1].n_air_cm3);
        layer.n_h2o_cm3 = 0.5 * (levels[i].n_h2o_cm3 + levels[i + 1].n_h2o_cm3);
        layers.push_back(layer);
    }

    // T at exactly 15 km from the level data, the ramp anchor for the
    // surface-temperature modifier.
    double t15 = levels.back().t_K;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        if (levels[i].z_km <= modifier_top_km && modifier_top_km <= levels[i + 1].z_km) {
            const double f = (modifier_top_km - levels[i].z_km) /
                             (levels[i + 1].z_km - levels[i].z_km);
            t15 = levels[i].t_K + f * (levels[i + 1].t_K - levels[i].t_K);
            break;
        }
    }

    return from_layers(std::move(layers), levels.front().t_K, levels.front().p_atm, t15,
                       std::move(provenance));
}

AtmosphereProfile set_surface_temperature(const AtmosphereProfile& profile, double t0_K,
                                          bool allow_outside_sweep) {
    if (!allow_outside_sweep && !(t0_K >= sweep_t0_min_K && t0_K <= sweep_t0_max_K))
        throw DomainError("surface temperature " + std::to_string(t0_K) +
                          " K outside the sweep range [263.15, 303.15] K "
                          "(pass the wide-range flag to override)");
    if (!(t0_K > 0.0)) throw DomainError("surface temperature must be positive");

    const double t15 = profile.t15_K();
    std::vector<Layer> layers = profile.layers();
    for (Layer& layer : layers) {
        const double z = layer.midpoint_km();
        if (z >= modifier_top_km) continue;
        const double t_new = t0_K + (t15 - t0_K) * (z / modifier_top_km);
        layer.n_air_cm3 *= layer.temperature_K / t_new;  // perfect gas at fixed p
        layer.temperature_K = t_new;
    }
    return AtmosphereProfile::from_layers(std::move(layers), t0_K,
                                          profile.surface_pressure_atm(), t15,
                                          profile.provenance());
}

double saturation_vapor_pressure(double temperature_K) {
    if (!(temperature_K > 180.0 && temperature_K < 330.0))
        throw DomainError("saturation_vapor_pressure: T outside (180, 330) K");
    const double t_c = temperature_K - 273.15;
    return 610.94 * std::exp(17.625 * t_c / (t_c + 243.04));
}

AtmosphereProfile set_constant_rh(const AtmosphereProfile& profile, double rh) {
    if (!(rh >= 0.0 && rh <= 1.0))
        throw DomainError("relative humidity must be within [0, 1], got " +
                          std::to_string(rh));

    std::vector<Layer> layers = profile.layers();
    for (Layer& layer : layers) {
        if (layer.midpoint_km() >= modifier_top_km) continue;
        const double e_s = saturation_vapor_pressure(layer.temperature_K);
        const double n_m3 = rh * e_s / (constants::k_boltzmann * layer.temperature_K);
        layer.n_h2o_cm3 = std::min(n_m3 * 1e-6, layer.n_air_cm3);
    }
    return AtmosphereProfile::from_layers(std::move(layers),
                                          profile.surface_temperature_K(),
                                          profile.surface_pressure_atm(), profile.t15_K(),
                                          profile.provenance());
}

std::vector<double> column_amount(const AtmosphereProfile& profile, Species species) {
    std::vector<double> columns;
    columns.reserve(profile.layers().size());
    for (const Layer& layer : profile.layers()) {
        const double n =
            species == Species::air ? layer.n_air_cm3 : layer.n_h2o_cm3;
        columns.push_back(n * (layer.z_hi_km - layer.z_lo_km) * 1e5);  // km -> cm
    }
    return columns;
}

}  // namespace zenith
