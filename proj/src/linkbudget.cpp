#include "zenith/linkbudget.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zenith/errors.hpp"

namespace zenith {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::secure_all_models: return "secure_all_models";
        case Verdict::secure_standard_eve: return "secure_standard_eve";
        case Verdict::secure_extended_only: return "secure_extended_only";
        case Verdict::insecure: return "insecure";
    }
    throw ContractError("unknown verdict");
}

double loss_db(double transmittance) {
    if (transmittance > 1.0)
        throw DomainError("transmittance above 1: " + std::to_string(transmittance));
    if (!(transmittance > 0.0)) return std::numeric_limits<double>::infinity();
    return -10.0 * std::log10(transmittance);
}

bool infinite_loss(double db) noexcept { return std::isinf(db); }

Verdict classify(const LossBudget& budget, const SecurityThresholds& thresholds) {
    if (!(thresholds.pns_eve_db <= thresholds.standard_eve_db &&
          thresholds.standard_eve_db <= thresholds.extended_limit_db))
        throw DomainError("security thresholds must be ordered pns <= standard <= extended");
    if (budget.atmospheric_db < 0.0 || budget.diffraction_db < 0.0 ||
        budget.system_db < 0.0)
        throw DomainError("loss budget components must be non-negative");

    const double total = budget.total_db();
    if (total <= thresholds.pns_eve_db) return Verdict::secure_all_models;
    if (total <= thresholds.standard_eve_db) return Verdict::secure_standard_eve;
    if (total <= thresholds.extended_limit_db) return Verdict::secure_extended_only;
    return Verdict::insecure;
}

}  // namespace zenith
