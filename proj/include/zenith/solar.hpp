#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "zenith/spectral_grid.hpp"

namespace zenith {

/// One band of the extraterrestrial source spectrum. The interval is
/// half-open: [lambda_lo, lambda_hi).
struct SolarBand {
    double lambda_lo_nm = 0.0;
    double lambda_hi_nm = 0.0;
    double irradiance_W_m2_nm = 0.0;  // band-mean spectral irradiance
};

/// Ordered, non-overlapping band list (gaps allowed).
class SolarSpectrum {
public:
    /// Parses the band file format: one `lo,hi,irradiance` triple per line,
    /// `#` comments. Bands are sorted on load; overlaps, inverted bounds and
    /// negative irradiance are parse errors naming the offending line.
    static SolarSpectrum parse(std::istream& in, std::string provenance);

    const std::vector<SolarBand>& bands() const noexcept { return bands_; }
    const std::string& provenance() const noexcept { return provenance_; }

private:
    std::vector<SolarBand> bands_;
    std::string provenance_;
};

/// Per-grid-point irradiance plus a mask of points not covered by any band.
struct ResampledSolar {
    std::vector<double> irradiance_W_m2_nm;
    std::vector<std::uint8_t> gap;  // 1 where no band covers the point
};

/// Band-mean assignment: each grid point takes the irradiance of the band
/// whose half-open wavelength interval contains it; uncovered points get 0
/// and are flagged.
ResampledSolar resample_solar(const SolarSpectrum& spectrum, const SpectralGrid& grid);

}  // namespace zenith
