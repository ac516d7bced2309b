#include <charconv>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>

#include "zenith/constants.hpp"
#include "zenith/errors.hpp"
#include "zenith/report.hpp"
#include "zenith/scenario.hpp"

namespace zenith {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

struct ValueParser {
    const std::string& source;
    std::size_t line;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(source, line, msg);
    }

    double number(std::string_view v) const {
        v = trim(v);
        double out = 0.0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || ptr != v.data() + v.size())
            fail("expected a number, got '" + std::string(v) + "'");
        return out;
    }

    int integer(std::string_view v) const {
        v = trim(v);
        int out = 0;
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || ptr != v.data() + v.size())
            fail("expected an integer, got '" + std::string(v) + "'");
        return out;
    }

    bool boolean(std::string_view v) const {
        v = trim(v);
        if (v == "true") return true;
        if (v == "false") return false;
        fail("expected true or false, got '" + std::string(v) + "'");
    }

    std::string text(std::string_view v) const {
        v = trim(v);
        if (v.size() < 2 || v.front() != '"' || v.back() != '"')
            fail("expected a double-quoted string, got '" + std::string(v) + "'");
        return std::string(v.substr(1, v.size() - 2));
    }

    WindowSpec window(std::string_view v) const {
        v = trim(v);
        if (v.size() < 2 || v.front() != '[' || v.back() != ']')
            fail("expected [lo, hi], got '" + std::string(v) + "'");
        const std::string_view inner = v.substr(1, v.size() - 2);
        const auto comma = inner.find(',');
        if (comma == std::string_view::npos) fail("expected two comma-separated numbers");
        return {number(inner.substr(0, comma)), number(inner.substr(comma + 1))};
    }
};

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

ScenarioConfig parse_config(std::istream& in, const std::string& source_name) {
    ScenarioConfig cfg;
    cfg.aerosol = default_aerosol(AerosolKind::none);

    enum class Section { top, aerosol, clouds, lines };
    Section section = Section::top;

    std::string raw;
    std::size_t line_no = 0;
    std::set<std::string> seen_top;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const ValueParser parse{source_name, line_no};

        if (line.front() == '[') {
            if (line == "[aerosol]") {
                section = Section::aerosol;
            } else if (line == "[[clouds]]") {
                section = Section::clouds;
                cfg.clouds.push_back(CloudLayer{});
            } else if (line == "[[lines]]") {
                section = Section::lines;
                cfg.lines.push_back(MoleculeSpec{});
                cfg.lines.back().path.clear();
            } else {
                parse.fail("unknown table '" + std::string(line) + "'");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) parse.fail("expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) parse.fail("empty key");

        switch (section) {
            case Section::top: {
                if (!seen_top.insert(key).second) parse.fail("duplicate key '" + key + "'");
                if (key == "id") cfg.id = parse.text(value);
                else if (key == "profile") cfg.profile_path = parse.text(value);
                else if (key == "solar") cfg.solar_path = parse.text(value);
                else if (key == "lambda_min_nm") cfg.grid.lambda_min_nm = parse.number(value);
                else if (key == "lambda_max_nm") cfg.grid.lambda_max_nm = parse.number(value);
                else if (key == "resolution_cm1") cfg.grid.resolution_cm1 = parse.number(value);
                else if (key == "surface_temperature_c")
                    cfg.surface_temperature_c = parse.number(value);
                else if (key == "constant_rh") cfg.constant_rh = parse.number(value);
                else if (key == "primary_window_nm") cfg.primary_window = parse.window(value);
                else if (key == "secondary_window_nm")
                    cfg.secondary_window = parse.window(value);
                else parse.fail("unknown key '" + key + "'");
                break;
            }
            case Section::aerosol: {
                if (key == "kind") cfg.aerosol.kind = aerosol_kind_from_name(parse.text(value));
                else if (key == "beta_550") cfg.aerosol.beta_550 = parse.number(value);
                else if (key == "angstrom") cfg.aerosol.angstrom = parse.number(value);
                else if (key == "rh_growth_exponent")
                    cfg.aerosol.rh_growth_exponent = parse.number(value);
                else if (key == "rh_coupling") cfg.aerosol_rh_coupling = parse.boolean(value);
                else parse.fail("unknown aerosol key '" + key + "'");
                break;
            }
            case Section::clouds: {
                CloudLayer& cloud = cfg.clouds.back();
                if (key == "base_km") cloud.base_km = parse.number(value);
                else if (key == "lwc_g_m3") cloud.lwc_g_m3 = parse.number(value);
                else if (key == "reff_um") cloud.reff_um = parse.number(value);
                else if (key == "thickness_m") cloud.thickness_m = parse.number(value);
                else parse.fail("unknown cloud key '" + key + "'");
                break;
            }
            case Section::lines: {
                MoleculeSpec& mol = cfg.lines.back();
                if (key == "molecule") mol.molecule_id = parse.integer(value);
                else if (key == "path") mol.path = parse.text(value);
                else if (key == "mass_kg") mol.mass_kg = parse.number(value);
                else if (key == "q_exponent") mol.q_exponent = parse.number(value);
                else if (key == "strength_floor") mol.strength_floor = parse.number(value);
                else if (key == "abundance") mol.abundance = parse.number(value);
                else if (key == "vmr") mol.vmr = parse.number(value);
                else parse.fail("unknown lines key '" + key + "'");
                break;
            }
        }
    }

    if (cfg.id.empty()) throw ParseError(source_name, 0, "missing required key 'id'");
    return cfg;
}

std::string write_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "id = " << quote(cfg.id) << "\n";
    out << "profile = " << quote(cfg.profile_path) << "\n";
    out << "solar = " << quote(cfg.solar_path) << "\n";
    out << "lambda_min_nm = " << format_double(cfg.grid.lambda_min_nm) << "\n";
    out << "lambda_max_nm = " << format_double(cfg.grid.lambda_max_nm) << "\n";
    out << "resolution_cm1 = " << format_double(cfg.grid.resolution_cm1) << "\n";
    out << "primary_window_nm = [" << format_double(cfg.primary_window.lo_nm) << ", "
        << format_double(cfg.primary_window.hi_nm) << "]\n";
    out << "secondary_window_nm = [" << format_double(cfg.secondary_window.lo_nm) << ", "
        << format_double(cfg.secondary_window.hi_nm) << "]\n";
    if (cfg.surface_temperature_c)
        out << "surface_temperature_c = " << format_double(*cfg.surface_temperature_c) << "\n";
    if (cfg.constant_rh) out << "constant_rh = " << format_double(*cfg.constant_rh) << "\n";

    if (cfg.aerosol.kind != AerosolKind::none || cfg.aerosol_rh_coupling) {
        out << "\n[aerosol]\n";
        out << "kind = " << quote(std::string(aerosol_kind_name(cfg.aerosol.kind))) << "\n";
        out << "beta_550 = " << format_double(cfg.aerosol.beta_550) << "\n";
        out << "angstrom = " << format_double(cfg.aerosol.angstrom) << "\n";
        out << "rh_growth_exponent = " << format_double(cfg.aerosol.rh_growth_exponent)
            << "\n";
        out << "rh_coupling = " << (cfg.aerosol_rh_coupling ? "true" : "false") << "\n";
    }
    for (const CloudLayer& cloud : cfg.clouds) {
        out << "\n[[clouds]]\n";
        out << "base_km = " << format_double(cloud.base_km) << "\n";
        out << "lwc_g_m3 = " << format_double(cloud.lwc_g_m3) << "\n";
        out << "reff_um = " << format_double(cloud.reff_um) << "\n";
        out << "thickness_m = " << format_double(cloud.thickness_m) << "\n";
    }
    for (const MoleculeSpec& mol : cfg.lines) {
        out << "\n[[lines]]\n";
        out << "molecule = " << mol.molecule_id << "\n";
        out << "path = " << quote(mol.path) << "\n";
        out << "mass_kg = " << format_double(mol.mass_kg) << "\n";
        out << "q_exponent = " << format_double(mol.q_exponent) << "\n";
        out << "strength_floor = " << format_double(mol.strength_floor) << "\n";
        out << "abundance = " << format_double(mol.abundance) << "\n";
        if (mol.vmr) out << "vmr = " << format_double(*mol.vmr) << "\n";
    }
    return out.str();
}

void validate_config(const ScenarioConfig& cfg) {
    if (cfg.id.empty()) throw DomainError("config: id must not be empty");
    for (char c : cfg.id)
        if (c == '/' || c == '\\')
            throw DomainError("config: id must not contain path separators");

    SpectralGrid::make(cfg.grid.lambda_min_nm, cfg.grid.lambda_max_nm,
                       cfg.grid.resolution_cm1);  // bounds check

    if (cfg.surface_temperature_c &&
        !(*cfg.surface_temperature_c >= -10.0 && *cfg.surface_temperature_c <= 30.0))
        throw DomainError("config: surface_temperature_c outside [-10, 30]");
    if (cfg.constant_rh && !(*cfg.constant_rh >= 0.0 && *cfg.constant_rh <= 1.0))
        throw DomainError("config: constant_rh outside [0, 1]");
    if (!(cfg.primary_window.lo_nm < cfg.primary_window.hi_nm) ||
        !(cfg.secondary_window.lo_nm < cfg.secondary_window.hi_nm))
        throw DomainError("config: band windows must have lo < hi");

    for (const CloudLayer& cloud : cfg.clouds) {
        if (!(cloud.base_km > 0.0)) throw DomainError("config: cloud base must be positive");
        if (cloud.lwc_g_m3 < 0.0 || !(cloud.reff_um > 0.0) || !(cloud.thickness_m > 0.0))
            throw DomainError("config: invalid cloud parameters");
    }

    std::set<int> molecules;
    for (const MoleculeSpec& mol : cfg.lines) {
        if (mol.path.empty()) throw DomainError("config: line table missing 'path'");
        if (!molecules.insert(mol.molecule_id).second)
            throw DomainError("config: duplicate molecule id " +
                              std::to_string(mol.molecule_id));
        if (mol.strength_floor < 0.0)
            throw DomainError("config: strength_floor must be non-negative");
        if (mol.vmr && !(*mol.vmr > 0.0 && *mol.vmr <= 1.0))
            throw DomainError("config: vmr must be in (0, 1]");
        if (!std::filesystem::exists(mol.path))
            throw ParseError(mol.path, 0, "line file not found");
    }

    if (cfg.profile_path.empty()) throw DomainError("config: missing 'profile'");
    if (cfg.solar_path.empty()) throw DomainError("config: missing 'solar'");
    if (!std::filesystem::exists(cfg.profile_path))
        throw ParseError(cfg.profile_path, 0, "profile file not found");
    if (!std::filesystem::exists(cfg.solar_path))
        throw ParseError(cfg.solar_path, 0, "solar file not found");
}

namespace {

ScenarioConfig base_config(const std::string& data_dir) {
    ScenarioConfig cfg;
    cfg.profile_path = data_dir + "/midlatitude_summer.profile";
    cfg.solar_path = data_dir + "/solar_visible_bands.csv";
    MoleculeSpec h2o;
    h2o.molecule_id = 1;
    h2o.path = data_dir + "/h2o_visible.par";
    h2o.mass_kg = constants::mass_h2o_kg;
    cfg.lines.push_back(h2o);
    return cfg;
}

std::string two_digit(int value) {
    std::string s = std::to_string(value);
    return s.size() < 2 ? "0" + s : s;
}

}  // namespace

std::vector<ScenarioConfig> preset(const std::string& name, const std::string& data_dir) {
    std::vector<ScenarioConfig> members;

    if (name == "aerosols") {
        for (const AerosolKind kind : {AerosolKind::rural, AerosolKind::maritime,
                                       AerosolKind::urban, AerosolKind::tropospheric}) {
            ScenarioConfig cfg = base_config(data_dir);
            cfg.id = std::string(aerosol_kind_name(kind));
            cfg.aerosol = default_aerosol(kind);
            members.push_back(std::move(cfg));
        }
    } else if (name == "temperature") {
        for (int t0_c = -10; t0_c <= 30; t0_c += 5) {
            ScenarioConfig cfg = base_config(data_dir);
            cfg.id = "t0_" + std::string(t0_c < 0 ? "m" : "p") + two_digit(std::abs(t0_c)) + "c";
            cfg.surface_temperature_c = static_cast<double>(t0_c);
            members.push_back(std::move(cfg));
        }
    } else if (name == "humidity") {
        std::vector<int> percents = {5};
        for (int p = 10; p <= 100; p += 10) percents.push_back(p);
        for (const int p : percents) {
            ScenarioConfig cfg = base_config(data_dir);
            cfg.id = "rh_" + (p < 100 ? "0" + two_digit(p) : std::to_string(p));
            cfg.constant_rh = p / 100.0;
            members.push_back(std::move(cfg));
        }
    } else if (name == "clouds") {
        const std::vector<std::vector<double>> base_sets = {
            {2.0, 3.0}, {2.0, 3.0, 4.0}, {2.0, 3.0, 4.0, 5.0}};
        for (const auto& bases : base_sets) {
            ScenarioConfig cfg = base_config(data_dir);
            cfg.id = "clouds";
            for (const double base : bases) {
                cfg.id += "_" + std::to_string(static_cast<int>(base));
                CloudLayer cloud;
                cloud.base_km = base;
                cfg.clouds.push_back(cloud);
            }
            cfg.id += "km";
            members.push_back(std::move(cfg));
        }
    } else if (name == "citydesert") {
        ScenarioConfig city = base_config(data_dir);
        city.id = "city";
        city.aerosol = default_aerosol(AerosolKind::urban);
        city.aerosol_rh_coupling = true;
        city.constant_rh = 0.9;
        members.push_back(std::move(city));

        ScenarioConfig desert = base_config(data_dir);
        desert.id = "desert";
        desert.constant_rh = 0.05;
        members.push_back(std::move(desert));
    } else {
        std::string known;
        for (const char* n : preset_names) {
            if (!known.empty()) known += ", ";
            known += n;
        }
        throw DomainError("unknown preset '" + name + "' (valid: " + known + ")");
    }
    return members;
}

}  // namespace zenith
