#pragma once

#include <string_view>

namespace zenith {

/// Channel loss ledger in dB. Defaults carry the commonly quoted free-space
/// figures: 15 dB diffraction, 6.5 dB optics plus detector efficiency.
struct LossBudget {
    double atmospheric_db = 0.0;
    double diffraction_db = 15.0;
    double system_db = 6.5;

    double total_db() const noexcept {
        return atmospheric_db + diffraction_db + system_db;
    }
};

/// Loss thresholds for secure key exchange, most to least restrictive:
/// 10 dB against a photon-number-splitting eavesdropper, 40 dB standard,
/// 60 dB extended limit.
struct SecurityThresholds {
    double pns_eve_db = 10.0;
    double standard_eve_db = 40.0;
    double extended_limit_db = 60.0;
};

enum class Verdict {
    secure_all_models,
    secure_standard_eve,
    secure_extended_only,
    insecure,
};

std::string_view verdict_name(Verdict v);

/// L = -10 log10(T) for 0 < T <= 1. T <= 0 reports the infinite-loss
/// sentinel (+inf) instead of failing: total extinction is a legitimate
/// cloud-scenario outcome. T > 1 is a domain error.
double loss_db(double transmittance);

bool infinite_loss(double db) noexcept;

/// Boundary totals classify into the more secure class (<=, not <).
/// Thresholds must be ordered pns <= standard <= extended.
Verdict classify(const LossBudget& budget, const SecurityThresholds& thresholds = {});

}  // namespace zenith
