#include "zenith/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zenith/errors.hpp"

namespace zenith {

void OpticalDepthStack::add(std::string label, std::vector<double> tau) {
    if (tau.size() != size_)
        throw ContractError("contributor '" + label + "' has length " +
                            std::to_string(tau.size()) + ", grid has " +
                            std::to_string(size_));
    if (std::find(labels_.begin(), labels_.end(), label) != labels_.end())
        throw ContractError("duplicate contributor label '" + label + "'");
    for (double v : tau)
        if (!(v >= 0.0))
            throw ContractError("contributor '" + label + "' has a negative optical depth");
    labels_.push_back(std::move(label));
    taus_.push_back(std::move(tau));
}

std::vector<double> molecular_od(const std::vector<CrossSection>& per_layer_sigma,
                                 const std::vector<double>& per_layer_column) {
    if (per_layer_sigma.size() != per_layer_column.size())
        throw ContractError("molecular_od: " + std::to_string(per_layer_sigma.size()) +
                            " cross sections vs " + std::to_string(per_layer_column.size()) +
                            " columns");
    if (per_layer_sigma.empty()) return {};

    const std::size_t n = per_layer_sigma.front().sigma.size();
    for (const CrossSection& cs : per_layer_sigma)
        if (cs.sigma.size() != n)
            throw ContractError("molecular_od: cross sections disagree on grid length");

    std::vector<double> tau(n, 0.0);
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        double sum = 0.0;
        for (std::size_t l = 0; l < per_layer_sigma.size(); ++l)
            sum += per_layer_sigma[l].sigma[static_cast<std::size_t>(i)] *
                   per_layer_column[l];
        tau[static_cast<std::size_t>(i)] = sum;
    }
    return tau;
}

TransmittanceSpectrum total_transmittance(const OpticalDepthStack& stack) {
    TransmittanceSpectrum out;
    out.contributor_labels = stack.labels();
    const std::size_t n = stack.grid_size();
    out.total_od.assign(n, 0.0);
    out.transmittance.assign(n, 1.0);
    out.underflow.assign(n, 0);

    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        double sum = 0.0;
        for (std::size_t c = 0; c < stack.count(); ++c) sum += stack.tau(c)[idx];
        out.total_od[idx] = sum;
        const double t = std::exp(-sum);
        out.transmittance[idx] = t;
        if (t == 0.0) out.underflow[idx] = 1;
    }
    return out;
}

std::vector<double> direct_irradiance(const TransmittanceSpectrum& t,
                                      const std::vector<double>& resampled_solar) {
    if (t.transmittance.size() != resampled_solar.size())
        throw ContractError("direct_irradiance: transmittance and solar grids differ (" +
                            std::to_string(t.transmittance.size()) + " vs " +
                            std::to_string(resampled_solar.size()) + ")");
    std::vector<double> e(t.transmittance.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = resampled_solar[i] * t.transmittance[i];
    return e;
}

BandMean band_mean(const TransmittanceSpectrum& t, const SpectralGrid& grid,
                   double lo_nm, double hi_nm) {
    if (t.transmittance.size() != grid.size())
        throw ContractError("band_mean: spectrum and grid lengths differ");
    if (!(lo_nm < hi_nm)) throw DomainError("band window is inverted");

    // Wavelength descends with index; the window [lo, hi] nm maps to
    // wavenumbers [1e7/hi, 1e7/lo].
    const std::size_t begin = grid.lower_index(1e7 / hi_nm);
    const std::size_t end = grid.upper_index(1e7 / lo_nm);
    if (begin >= end)
        throw DomainError("band window [" + std::to_string(lo_nm) + ", " +
                          std::to_string(hi_nm) + "] nm does not overlap the grid");

    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += t.transmittance[i];
    return {sum / static_cast<double>(end - begin), end - begin};
}

}  // namespace zenith
