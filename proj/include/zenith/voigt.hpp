#pragma once

namespace zenith {

/// Voigt function K(x,y) = Re w(x+iy), the real part of the Faddeeva
/// function. Humlicek's four-region rational approximation, with the
/// near-axis strip (y < 1e-4, |x|+y >= 5.5) switched to the asymptotic
/// series of w plus the exponentially small exp(y^2-x^2)cos(2xy) term that
/// the power series cannot represent. Relative accuracy is better than 1e-4
/// for y in [1e-8, 1e3], |x| <= 1e3.
///
/// Throws DomainError for y < 0.
double voigt_k(double x, double y);

}  // namespace zenith
