#include "zenith/spectral_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zenith/errors.hpp"

namespace zenith {

double wavelength_to_wavenumber(double lambda_nm) {
    if (!(lambda_nm > 0.0))
        throw DomainError("wavelength must be positive, got " + std::to_string(lambda_nm));
    return 1e7 / lambda_nm;
}

double wavenumber_to_wavelength(double nu_cm1) {
    if (!(nu_cm1 > 0.0))
        throw DomainError("wavenumber must be positive, got " + std::to_string(nu_cm1));
    return 1e7 / nu_cm1;
}

SpectralGrid SpectralGrid::make(double lambda_min_nm, double lambda_max_nm,
                                double resolution_cm1) {
    if (!(lambda_min_nm >= 200.0 && lambda_max_nm <= 1100.0 &&
          lambda_min_nm < lambda_max_nm)) {
        throw DomainError("grid bounds must satisfy 200 <= min < max <= 1100 nm, got [" +
                          std::to_string(lambda_min_nm) + ", " +
                          std::to_string(lambda_max_nm) + "]");
    }
    if (!(resolution_cm1 > 0.0))
        throw DomainError("grid resolution must be positive");

    const double nu_lo = 1e7 / lambda_max_nm;
    const double nu_hi = 1e7 / lambda_min_nm;
    // Last point is the largest nu_lo + k*dnu not exceeding nu_hi; the tiny
    // slack keeps exact integer step counts from flooring one short.
    const auto steps =
        static_cast<long long>(std::floor((nu_hi - nu_lo) / resolution_cm1 + 1e-9));
    if (steps < 1)
        throw DomainError("resolution " + std::to_string(resolution_cm1) +
                          " cm^-1 too coarse for the requested range (needs >= 2 points)");

    SpectralGrid grid;
    grid.resolution_ = resolution_cm1;
    grid.lambda_min_ = lambda_min_nm;
    grid.lambda_max_ = lambda_max_nm;
    grid.points_.resize(static_cast<std::size_t>(steps) + 1);
    for (std::size_t i = 0; i < grid.points_.size(); ++i)
        grid.points_[i] = nu_lo + static_cast<double>(i) * resolution_cm1;
    return grid;
}

std::size_t SpectralGrid::lower_index(double nu) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), nu);
    return static_cast<std::size_t>(it - points_.begin());
}

std::size_t SpectralGrid::upper_index(double nu) const {
    const auto it = std::upper_bound(points_.begin(), points_.end(), nu);
    return static_cast<std::size_t>(it - points_.begin());
}

}  // namespace zenith
