#include "zenith/voigt.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "zenith/constants.hpp"
#include "zenith/errors.hpp"

namespace zenith {
namespace {

using cd = std::complex<double>;

// Asymptotic coefficients (2m-1)!!/2^m of w(z) ~ (i/sqrt(pi) z) sum a_m z^-2m.
constexpr auto asym_coeff = [] {
    std::array<double, 13> a{};
    a[0] = 1.0;
    for (int m = 1; m < 13; ++m) a[m] = a[m - 1] * (2 * m - 1) / 2.0;
    return a;
}();

// Near the real axis the power series carries essentially no real part on
// its own; the Re comes from the O(y) tilt plus the exponentially small
// exp(-z^2) contribution, which must be added explicitly.
double re_w_asymptotic(double x, double y) {
    const cd z(x, y);
    const cd inv_z2 = 1.0 / (z * z);
    cd sum = 0.0;
    cd power = 1.0;
    for (const double a : asym_coeff) {
        sum += a * power;
        power *= inv_z2;
    }
    const cd series = cd(0.0, 1.0) / (constants::sqrt_pi * z) * sum;
    return series.real() + std::exp(y * y - x * x) * std::cos(2.0 * x * y);
}

}  // namespace

double voigt_k(double x, double y) {
    if (y < 0.0)
        throw DomainError("voigt_k: y must be non-negative, got " + std::to_string(y));

    const double ax = std::fabs(x);
    const double s = ax + y;

    if (y < 1e-4 && s >= 5.5) return re_w_asymptotic(ax, y);

    // Humlicek (1982) w4, evaluated in t = y - i x.
    const cd t(y, -x);
    if (s >= 15.0) {
        return (t * 0.5641896 / (0.5 + t * t)).real();
    }
    if (s >= 5.5) {
        const cd u = t * t;
        return (t * (1.410474 + u * 0.5641896) / (0.75 + u * (3.0 + u))).real();
    }
    if (y >= 0.195 * ax - 0.176) {
        return ((16.4955 + t * (20.20933 + t * (11.96482 + t * (3.778987 + t * 0.5642236)))) /
                (16.4955 + t * (38.82363 + t * (39.27121 + t * (21.69274 + t * (6.699398 + t))))))
            .real();
    }
    const cd u = t * t;
    const cd num =
        t * (36183.31 -
             u * (3321.9905 -
                  u * (1540.787 -
                       u * (219.0313 - u * (35.76683 - u * (1.320522 - u * 0.56419))))));
    const cd den =
        32066.6 -
        u * (24322.84 -
             u * (9022.228 -
                  u * (2186.181 - u * (364.2191 - u * (61.57037 - u * (1.841439 - u))))));
    return (std::exp(u) - num / den).real();
}

}  // namespace zenith
