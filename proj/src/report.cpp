#include "zenith/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zenith/errors.hpp"

namespace zenith {
namespace {

std::string now_utc() {
    const std::time_t t =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw StageError("emit", "cannot write " + path.string());
    return out;
}

nlohmann::ordered_json window_json(const WindowSpec& w, const BandMean& mean) {
    nlohmann::ordered_json j;
    j["window_nm"] = {w.lo_nm, w.hi_nm};
    j["mean_transmittance"] = mean.mean;
    j["points"] = mean.count;
    return j;
}

nlohmann::ordered_json db_json(double db) {
    if (std::isinf(db)) return "inf";
    return db;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::vector<std::filesystem::path> emit_report(const ScenarioReport& report,
                                               const std::filesystem::path& dir,
                                               const EmitOptions& options) {
    std::filesystem::create_directories(dir);
    const std::string timestamp =
        options.timestamp.empty() ? now_utc() : options.timestamp;

    std::vector<std::filesystem::path> written;

    for (const MemberReport& member : report.members) {
        const auto path = dir / (member.id + ".spectrum.csv");
        auto out = open_output(path);
        out << "# scenario: " << report.scenario_id << "\n";
        out << "# member: " << member.id << "\n";
        out << "# timestamp: " << timestamp << "\n";
        out << "# contributors:";
        for (const auto& label : member.spectrum.contributor_labels) out << " " << label;
        out << "\n";
        out << "lambda_nm,wavenumber_cm1,transmittance,direct_irradiance_W_m2_nm,total_od\n";
        // ascending wavelength = descending wavenumber index
        for (std::size_t i = member.grid.size(); i-- > 0;) {
            out << format_double(member.grid.wavelength(i)) << ','
                << format_double(member.grid.wavenumber(i)) << ','
                << format_double(member.spectrum.transmittance[i]) << ','
                << format_double(member.irradiance_W_m2_nm[i]) << ','
                << format_double(member.spectrum.total_od[i]) << '\n';
        }
        written.push_back(path);
    }

    {
        nlohmann::ordered_json summary;
        summary["scenario"] = report.scenario_id;
        summary["timestamp"] = timestamp;
        summary["members"] = nlohmann::ordered_json::array();
        for (const MemberReport& member : report.members) {
            nlohmann::ordered_json j;
            j["id"] = member.id;
            j["primary"] = window_json(member.primary_window, member.primary);
            j["secondary"] = window_json(member.secondary_window, member.secondary);
            j["atmospheric_db"] = db_json(member.atmospheric_db);
            j["underflow"] = member.underflow;
            j["budget"] = {
                {"atmospheric_db", db_json(member.budget.atmospheric_db)},
                {"diffraction_db", member.budget.diffraction_db},
                {"system_db", member.budget.system_db},
                {"total_db", db_json(member.budget.total_db())},
            };
            j["verdict"] = std::string(verdict_name(member.verdict));
            j["contributors"] = member.spectrum.contributor_labels;
            summary["members"].push_back(std::move(j));
        }
        const auto path = dir / "summary.json";
        auto out = open_output(path);
        out << summary.dump(2) << "\n";
        written.push_back(path);
    }

    {
        const auto path = dir / "plotdata.csv";
        auto out = open_output(path);
        out << "# scenario: " << report.scenario_id << "\n";
        out << "# timestamp: " << timestamp << "\n";
        out << "member,lambda_nm,transmittance\n";
        for (const MemberReport& member : report.members) {
            for (std::size_t i = member.grid.size(); i-- > 0;) {
                out << member.id << ',' << format_double(member.grid.wavelength(i)) << ','
                    << format_double(member.spectrum.transmittance[i]) << '\n';
            }
        }
        written.push_back(path);
    }

    return written;
}

}  // namespace zenith
