#include "zpf/zeropoint.hpp"

#include <cmath>
#include <numeric>

#include "zpf/constants.hpp"

namespace zpf {

using constants::hbar;
using constants::pi;

double ValidityParams::omega_max() const {
    if (!(element_size_l > 0.0)) throw Error("element size must be positive");
    return constants::c_light / element_size_l;
}

double zero_point_integrand(const std::complex<double>& Z, double C, double omega) {
    const double R = Z.real(), X = Z.imag();
    const double a = 1.0 - X * C * omega;
    const double b = R * C * omega;
    return b / (a * a + b * b);
}

double characteristic_time(const std::vector<double>& tcs) {
    if (tcs.empty()) return 1e-9;
    double s = 0.0;
    for (double t : tcs) s += std::log(t);
    return std::exp(s / static_cast<double>(tcs.size()));
}

namespace {

/// Frequencies (rad/s) where the integrand has features: one per element
/// time constant.
std::vector<double> feature_frequencies(const std::vector<double>& tcs) {
    std::vector<double> w;
    for (double t : tcs)
        if (t > 0.0) w.push_back(1.0 / t);
    return w;
}

ZeroPointResult integrate_zero_point(const std::function<double(double)>& g,
                                     const std::vector<double>& tcs,
                                     const QuadratureConfig& quad,
                                     const ValidityParams& vp,
                                     bool renormalized,
                                     bool reference_energy_defined,
                                     const char* divergence_what) {
    const double tau = characteristic_time(tcs);
    const double w0 = 1.0 / tau;
    const double slope = tail_power_law(g, w0);
    if (slope > -1.5)
        throw DivergenceError(std::string(divergence_what) +
                              " (tail power law " + std::to_string(slope) + " > -1.5)");
    auto res = integrate_semi_infinite(g, w0, quad, feature_frequencies(tcs));
    ZeroPointResult out;
    out.energy = hbar / (2.0 * pi) * res.value;
    out.renormalized = renormalized;
    out.reference_energy_defined = reference_energy_defined;
    out.abs_error_estimate = hbar / (2.0 * pi) * res.abs_error;
    out.tail_fraction_beyond_cutoff = tail_fraction(g, w0, vp.omega_max(), quad);
    out.validity_ok = out.tail_fraction_beyond_cutoff < 1e-2;
    return out;
}

} // namespace

ZeroPointResult energy_raw(const PortImpedance& Z, double C,
                           const QuadratureConfig& quad, const ValidityParams& vp) {
    if (!(C > 0.0)) throw Error("energy_raw: C must be positive");
    auto g = [&Z, C](double w) { return zero_point_integrand(Z(w), C, w); };
    return integrate_zero_point(g, Z.time_constants, quad, vp,
                                /*renormalized=*/false,
                                /*reference_energy_defined=*/true,
                                "raw zero-point integral requires renormalization");
}

ZeroPointResult energy_renormalized(const CircuitNetwork& net, double C,
                                    const QuadratureConfig& quad,
                                    const ValidityParams& vp) {
    if (!(C > 0.0)) throw Error("energy_renormalized: C must be positive");
    ReferenceCircuit ref = reference_network(net);

    std::function<double(double)> g;
    if (ref.kind == ReferenceKind::Network) {
        CircuitNetwork refnet = ref.network;
        g = [net, refnet, C](double w) {
            return zero_point_integrand(evaluate_impedance(net, w), C, w) -
                   zero_point_integrand(evaluate_impedance(refnet, w), C, w);
        };
    } else {
        // Open or shorted reference carries no zero-point energy.
        g = [net, C](double w) {
            return zero_point_integrand(evaluate_impedance(net, w), C, w);
        };
    }
    return integrate_zero_point(
        g, net.time_constants(C), quad, vp,
        /*renormalized=*/true,
        /*reference_energy_defined=*/ref.kind != ReferenceKind::Network,
        "renormalized difference integrand is non-integrable "
        "(reference construction failure)");
}

double closed_form_I(double R, double C0, double C) {
    return -hbar / (2.0 * pi * R * C) * std::log1p(C / C0);
}

double closed_form_I_dC(double R, double C0, double C) {
    return hbar / (2.0 * pi * R * C * C) * (std::log1p(C / C0) - C / (C0 + C));
}

namespace {

/// U_II = (hbar/(RC)) Phi2(q), q = L/(R^2 C). Underdamped (q > 1/4) and
/// overdamped (q < 1/4) branches are analytic continuations of each other;
/// both are real, positive, and continuous across q = 1/4.
double phi2(double q) {
    const double d = 4.0 * q - 1.0;
    if (std::abs(d) < 1e-9) return 1.0 / pi;  // q = 1/4: both branches limit here
    if (d > 0.0) {
        const double s = std::sqrt(d);
        return (1.0 + (2.0 / pi) * std::atan((2.0 * q - 1.0) / s)) / (4.0 * s);
    }
    const double S = std::sqrt(-d);
    return std::atanh(S / (1.0 - 2.0 * q)) / (2.0 * pi * S);
}

double phi2_prime(double q) {
    const double d = 4.0 * q - 1.0;
    if (d > 1e-9) {
        const double s = std::sqrt(d);
        const double s3 = s * d;
        return -0.5 / s3 + 1.0 / (2.0 * pi * q * d) -
               std::atan((2.0 * q - 1.0) / s) / (pi * s3);
    }
    if (d < -1e-9) {
        const double S = std::sqrt(-d);
        const double S3 = S * (-d);
        return (q * std::atanh(S / (1.0 - 2.0 * q)) - 0.5 * S) / (pi * q * S3);
    }
    return -4.0 / (3.0 * pi);  // q -> 1/4 limit of either branch
}

/// Bracket of U_III = (hbar/(RC)) * br(q)/(8 pi).
double br3(double q) {
    const double d = 4.0 / q - 1.0;
    if (std::abs(d) < 1e-9) return 2.0 * std::log(q) - 2.0;
    if (d > 0.0) {
        const double s = std::sqrt(d);
        const double m = 2.0 / q - 1.0;
        return (2.0 * m / s) * std::atan(m / s) + pi * m / s + 2.0 * std::log(q);
    }
    const double sp = std::sqrt(-d);
    const double m = std::abs(2.0 / q - 1.0);
    return -(2.0 * m / sp) * std::atanh(sp / m) + 2.0 * std::log(q);
}

double br3_prime(double q) {
    const double d = 4.0 / q - 1.0;
    if (d > 1e-9) {
        const double s = std::sqrt(d);
        const double m = 2.0 / q - 1.0;
        return 4.0 / (q * (4.0 - q)) -
               4.0 * (2.0 * std::atan(m / s) + pi) / (q * q * q * s * s * s);
    }
    if (d < -1e-9) {
        const double S = std::sqrt(-d);
        const double M = 1.0 - 2.0 / q;
        return 8.0 * std::atanh(S / M) / (q * q * q * S * S * S) -
               4.0 / (q * (q - 4.0));
    }
    return 2.0 / q - 2.0 / 3.0;  // limit at q = 4 (both branches)
}

} // namespace

double closed_form_II(double R, double L, double C) {
    const double q = L / (R * R * C);
    return hbar / (R * C) * phi2(q);
}

double closed_form_II_dC(double R, double L, double C) {
    const double q = L / (R * R * C);
    return -hbar / (R * C * C) * (phi2(q) + q * phi2_prime(q));
}

double closed_form_III(double R, double L, double C) {
    const double q = L / (R * R * C);
    return hbar / (R * C) * br3(q) / (8.0 * pi);
}

double closed_form_III_dC(double R, double L, double C) {
    const double q = L / (R * R * C);
    return -hbar / (R * C * C) * (br3(q) + q * br3_prime(q)) / (8.0 * pi);
}

double closed_form_IV(double R, double L, double C0, double C,
                      const QuadratureConfig& quad) {
    const double r = C0 / C;
    const double a = std::sqrt(L / C0) / R;
    const double a2 = a * a;
    auto integrand = [r, a2](double x) {
        const double num =
            x * (2.0 * a2 * r * (r + 1.0) - r * r -
                 x * a2 * r * (2.0 * (a2 - 1.0) * r * r + a2 * r)) - 1.0;
        const double t1 = 1.0 - a2 * r * x;
        const double t2 = 1.0 - x * a2 * r * (r + 1.0);
        const double den = (1.0 + x) * (r * r * x * t1 * t1 + t2 * t2);
        return num / den;
    };
    // Features sit where the squared terms in the denominator vanish.
    std::vector<double> splits{1.0, 1.0 / (a2 * r), 1.0 / (a2 * r * (r + 1.0))};
    auto res = integrate_semi_infinite(integrand, 1.0 / (a2 * r * (r + 1.0)),
                                       quad, splits);
    return hbar / (R * C0) * r / (4.0 * pi) * res.value;
}

ValidityReport check_validity(const CircuitNetwork& net, double C,
                              const ValidityParams& vp,
                              const QuadratureConfig& quad) {
    ZeroPointResult r = energy_renormalized(net, C, quad, vp);
    return {r.validity_ok, r.tail_fraction_beyond_cutoff};
}

} // namespace zpf
