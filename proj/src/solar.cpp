#include "zenith/solar.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "zenith/errors.hpp"

namespace zenith {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view field, const std::string& source, std::size_t line) {
    field = trim(field);
    if (field.empty()) throw ParseError(source, line, "empty numeric field");
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(source, line,
                         "not a number: '" + std::string(field) + "'");
    return value;
}

}  // namespace

SolarSpectrum SolarSpectrum::parse(std::istream& in, std::string provenance) {
    SolarSpectrum spectrum;
    spectrum.provenance_ = std::move(provenance);

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos)
            throw ParseError(spectrum.provenance_, line_no,
                             "expected 'lambda_lo,lambda_hi,irradiance'");

        SolarBand band;
        band.lambda_lo_nm = parse_number(line.substr(0, c1), spectrum.provenance_, line_no);
        band.lambda_hi_nm =
            parse_number(line.substr(c1 + 1, c2 - c1 - 1), spectrum.provenance_, line_no);
        band.irradiance_W_m2_nm =
            parse_number(line.substr(c2 + 1), spectrum.provenance_, line_no);

        if (!(band.lambda_lo_nm < band.lambda_hi_nm))
            throw ParseError(spectrum.provenance_, line_no, "band bounds inverted or equal");
        if (band.irradiance_W_m2_nm < 0.0)
            throw ParseError(spectrum.provenance_, line_no, "negative irradiance");
        spectrum.bands_.push_back(band);
    }

    std::stable_sort(spectrum.bands_.begin(), spectrum.bands_.end(),
                     [](const SolarBand& a, const SolarBand& b) {
                         return a.lambda_lo_nm < b.lambda_lo_nm;
                     });
    for (std::size_t i = 1; i < spectrum.bands_.size(); ++i) {
        if (spectrum.bands_[i].lambda_lo_nm < spectrum.bands_[i - 1].lambda_hi_nm)
            throw ParseError(spectrum.provenance_, 0,
                             "overlapping bands around " +
                                 std::to_string(spectrum.bands_[i].lambda_lo_nm) + " nm");
    }
    return spectrum;
}

ResampledSolar resample_solar(const SolarSpectrum& spectrum, const SpectralGrid& grid) {
    ResampledSolar out;
    out.irradiance_W_m2_nm.assign(grid.size(), 0.0);
    out.gap.assign(grid.size(), 1);

    const auto& bands = spectrum.bands();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double lambda = grid.wavelength(i);
        // Bands are sorted by lambda_lo; membership is half-open [lo, hi).
        auto it = std::upper_bound(bands.begin(), bands.end(), lambda,
                                   [](double l, const SolarBand& b) {
                                       return l < b.lambda_lo_nm;
                                   });
        if (it == bands.begin()) continue;
        const SolarBand& band = *(it - 1);
        if (lambda < band.lambda_hi_nm) {
            out.irradiance_W_m2_nm[i] = band.irradiance_W_m2_nm;
            out.gap[i] = 0;
        }
    }
    return out;
}

}  // namespace zenith
