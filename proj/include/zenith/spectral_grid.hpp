#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace zenith {

/// nu = 1e7 / lambda. Throws DomainError for non-positive input.
double wavelength_to_wavenumber(double lambda_nm);
double wavenumber_to_wavelength(double nu_cm1);

/// Uniform wavenumber axis covering a wavelength interval.
///
/// Points run from nu_lo = 1e7/lambda_max upward in steps of the resolution;
/// the last point is the largest one not exceeding 1e7/lambda_min. Ascending
/// wavenumber means descending wavelength.
class SpectralGrid {
public:
    SpectralGrid() = default;  // empty grid; populate via make()

    static constexpr double default_lambda_min_nm = 256.0;
    static constexpr double default_lambda_max_nm = 1010.320;
    static constexpr double default_resolution_cm1 = 1.0;

    /// Bounds must satisfy 200 <= lambda_min < lambda_max <= 1100 and the
    /// resolution must be positive and fine enough to yield >= 2 points.
    static SpectralGrid make(double lambda_min_nm, double lambda_max_nm,
                             double resolution_cm1);

    static SpectralGrid make_default() {
        return make(default_lambda_min_nm, default_lambda_max_nm,
                    default_resolution_cm1);
    }

    std::size_t size() const noexcept { return points_.size(); }
    double wavenumber(std::size_t i) const { return points_[i]; }
    double wavelength(std::size_t i) const { return 1e7 / points_[i]; }
    std::span<const double> wavenumbers() const noexcept { return points_; }

    double resolution() const noexcept { return resolution_; }
    double lambda_min_nm() const noexcept { return lambda_min_; }
    double lambda_max_nm() const noexcept { return lambda_max_; }
    double nu_min() const noexcept { return points_.front(); }
    double nu_max() const noexcept { return points_.back(); }

    /// First index with wavenumber >= nu (size() if none).
    std::size_t lower_index(double nu) const;
    /// One past the last index with wavenumber <= nu (0 if none).
    std::size_t upper_index(double nu) const;

    bool operator==(const SpectralGrid&) const = default;

private:
    std::vector<double> points_;
    double resolution_ = 0.0;
    double lambda_min_ = 0.0;
    double lambda_max_ = 0.0;
};

}  // namespace zenith
