#include "zpf/casimir.hpp"

#include <cmath>

#include "zpf/constants.hpp"

namespace zpf {

using constants::c_light;
using constants::hbar;
using constants::pi;

double casimir_ideal(double area, double y) {
    if (!(area > 0.0) || !(y > 0.0))
        throw Error("casimir_ideal: area and separation must be positive");
    return pi * pi * hbar * c_light * area / (240.0 * y * y * y * y);
}

double casimir_plasma(const PlasmaPlate& plate, const QuadratureConfig& quad) {
    const double y = plate.separation, A = plate.area, lp = plate.plasma_wavelength;
    if (!(y > 0.0) || !(A > 0.0) || !(lp > 0.0))
        throw Error("casimir_plasma: all plate parameters must be positive");

    // Dimensionless variables: u = 2 kappa0 y, Z = 2 zeta y / c,
    // w = 2 omega_p y / c = 4 pi y / lambda_p. Then
    //   F = (hbar c A)/(32 pi^2 y^4) Int_0^inf dZ Int_Z^inf du u^2 *
    //       Sum_p r_p^2 e^{-u} / (1 - r_p^2 e^{-u}),
    // with kappa-tilde = sqrt(u^2 + w^2),
    //   r_TE = (u - kt)/(u + kt),  r_TM = (u - kt/eps)/(u + kt/eps),
    // eps = 1 + (w/Z)^2. The kt/eps form stays finite as Z -> 0.
    const double w = 4.0 * pi * y / lp;
    const double w2 = w * w;

    QuadratureConfig inner = quad;
    inner.rel_tol = std::max(quad.rel_tol, 1e-8);

    auto inner_integral = [&](double Z) {
        const double Z2 = Z * Z;
        auto f = [&](double v) {
            const double u = Z + v;
            if (u > 700.0) return 0.0;  // e^{-u} underflows
            const double kt = std::sqrt(u * u + w2);
            const double kt_over_eps = kt * (Z2 / (Z2 + w2));
            const double rTE = (u - kt) / (u + kt);
            const double rTM = (u - kt_over_eps) / (u + kt_over_eps);
            const double e = std::exp(-u);
            const double sTE = rTE * rTE * e, sTM = rTM * rTM * e;
            return u * u * (sTE / (1.0 - sTE) + sTM / (1.0 - sTM));
        };
        return integrate_semi_infinite(f, 1.0, inner).value;
    };

    // The e^{-u} factor confines all weight to Z, u of order unity.
    auto res = integrate_semi_infinite(inner_integral, 1.0, quad);
    return hbar * c_light * A / (32.0 * pi * pi * y * y * y * y) * res.value;
}

} // namespace zpf
