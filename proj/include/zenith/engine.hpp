#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zenith/absorption.hpp"
#include "zenith/spectral_grid.hpp"

namespace zenith {

/// Additive ledger of per-wavelength optical depths, one entry per named
/// contributor. Labels are unique; every entry is non-negative and grid
/// length.
class OpticalDepthStack {
public:
    explicit OpticalDepthStack(std::size_t grid_size) : size_(grid_size) {}

    /// Adds a contributor. Duplicate labels, wrong lengths or negative
    /// values are contract errors.
    void add(std::string label, std::vector<double> tau);

    std::size_t grid_size() const noexcept { return size_; }
    std::size_t count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<double>& tau(std::size_t i) const { return taus_[i]; }

private:
    std::size_t size_;
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> taus_;
};

/// Beer-Lambert result. total_od is the contributor sum; transmittance is
/// exp(-total_od), 0 with the underflow flag where the exponential
/// underflows.
struct TransmittanceSpectrum {
    std::vector<double> transmittance;
    std::vector<double> total_od;
    std::vector<std::uint8_t> underflow;
    std::string scenario_id;
    std::vector<std::string> contributor_labels;
};

/// Sums per-layer cross sections against per-layer columns:
/// tau(nu) = sum_layers sigma_layer(nu) * column_layer.
std::vector<double> molecular_od(const std::vector<CrossSection>& per_layer_sigma,
                                 const std::vector<double>& per_layer_column);

TransmittanceSpectrum total_transmittance(const OpticalDepthStack& stack);

/// E(lambda) = E0(lambda) * T(lambda); lengths must match.
std::vector<double> direct_irradiance(const TransmittanceSpectrum& t,
                                      const std::vector<double>& resampled_solar);

struct BandMean {
    double mean = 0.0;
    std::size_t count = 0;
};

/// Unweighted mean of T over grid points with wavelength inside
/// [lo_nm, hi_nm]. Empty overlap is a domain error.
BandMean band_mean(const TransmittanceSpectrum& t, const SpectralGrid& grid,
                   double lo_nm, double hi_nm);

}  // namespace zenith
