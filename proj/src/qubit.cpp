#include "zpf/qubit.hpp"

#include <cmath>

#include "zpf/constants.hpp"

namespace zpf {

using constants::e_charge;
using constants::hbar;
using constants::pi;

void TransmonParams::validate() const {
    if (!(E_C > 0.0) || !(E_J > 0.0) || !(C_g > 0.0) || !(C_J > 0.0))
        throw Error("transmon parameters must all be positive");
}

double TransmonParams::omega0() const { return std::sqrt(8.0 * E_C * E_J) / hbar; }
double TransmonParams::omega10() const { return omega0() - E_C / hbar; }
double TransmonParams::omega21() const { return omega0() - 2.0 * E_C / hbar; }

double TransmonParams::Z_J() const {
    return hbar / (e_charge * e_charge) * std::sqrt(E_C / (2.0 * E_J));
}

double TransmonParams::Q_abs(int n, int nprime) const {
    if (nprime != n + 1 && nprime != n - 1) return 0.0;
    const double scale = 2.0 * e_charge * std::pow(E_J / (8.0 * E_C), 0.25);
    const int upper = std::max(n, nprime);  // matrix element between upper-1, upper
    return scale * std::sqrt(upper / 2.0);
}

std::vector<std::string> TransmonParams::warnings() const {
    std::vector<std::string> w;
    if (E_J / E_C < 20.0)
        w.push_back("E_J/E_C = " + std::to_string(E_J / E_C) +
                    " below 20: marginal transmon regime");
    if (beta() > 0.2)
        w.push_back("beta = " + std::to_string(beta()) +
                    " above 0.2: weak-coupling treatment marginal");
    return w;
}

VoltageSpectrum node_spectrum(const CircuitNetwork& net) {
    VoltageSpectrum out;
    std::vector<std::pair<std::string, double>> resistors;
    for (const auto& e : net.elements())
        if (e.kind == ElementKind::Resistor) resistors.emplace_back(e.name, e.value);
    if (resistors.empty()) {
        out.S = [](double) { return 0.0; };
        out.warning = "network has no dissipation: spectrum is identically zero";
        return out;
    }
    out.S = [net](double omega) {
        auto zt = noise_transfer_impedances(net, omega);
        double s = 0.0;
        size_t k = 0;
        for (const auto& e : net.elements()) {
            if (e.kind != ElementKind::Resistor) continue;
            s += noise_spectrum(e.value, omega, 0.0) * std::norm(zt[k]);
            ++k;
        }
        return s;
    };
    for (double t : net.time_constants())
        if (t > 0.0) out.feature_frequencies.push_back(1.0 / t);
    return out;
}

namespace {

/// P Int_0^inf g(x)/(x - 1) dx in the scaled variable x = omega/pole,
/// where g decays fast enough for the tail to converge. Window [1/2, 3/2]
/// uses the subtraction g(x) -> g(x) - g(1); the leftover
/// g(1) P Int dx/(x-1) vanishes on the symmetric window.
double pv_unit_pole(const std::function<double(double)>& g,
                    const std::vector<double>& splits,
                    const QuadratureConfig& quad) {
    const double g1 = g(1.0);
    auto inner = [&g, g1](double x) {
        const double d = x - 1.0;
        if (std::abs(d) < 1e-13) {
            const double h = 1e-7;
            return (g(1.0 + h) - g(1.0 - h)) / (2.0 * h);  // limit g'(1)
        }
        return (g(x) - g1) / d;
    };
    std::vector<double> window_splits{1.0};
    for (double s : splits)
        if (s > 0.5 && s < 1.5) window_splits.push_back(s);
    double total = integrate(inner, 0.5, 1.5, quad, window_splits).value;
    auto outer = [&g](double x) { return g(x) / (x - 1.0); };
    total += integrate(outer, 1e-12, 0.5, quad, splits).value;
    std::vector<double> tail_splits;
    for (double s : splits)
        if (s > 1.5) tail_splits.push_back(s - 1.5);
    total += integrate_semi_infinite(
                 [&outer](double u) { return outer(1.5 + u); }, 1.0, quad, tail_splits)
                 .value;
    return total;
}

double integrate_regular(const std::function<double(double)>& g,
                         const std::vector<double>& splits,
                         const QuadratureConfig& quad) {
    return integrate_semi_infinite(g, 1.0, quad, splits).value;
}

} // namespace

double spectral_shift_kernel(const VoltageSpectrum& S, double omega,
                             const QuadratureConfig& quad) {
    // Scale frequencies by |omega| (or a feature frequency when omega = 0)
    // and spectrum values by a reference so the integrand is O(1).
    double wscale = std::abs(omega);
    if (wscale == 0.0)
        wscale = S.feature_frequencies.empty() ? 1.0 : S.feature_frequencies.front();
    double Sref = std::abs(S(wscale));
    if (Sref == 0.0) Sref = 1.0;

    std::vector<double> splits;
    for (double f : S.feature_frequencies) splits.push_back(f / wscale);

    auto g = [&](double x) { return S(x * wscale) / Sref; };
    // Sample the decay test beyond every spectral feature (knee), else a
    // knee inside the sampling window masquerades as slow decay.
    double tail_scale = 1.0;
    for (double s : splits) tail_scale = std::max(tail_scale, s);
    const double slope =
        tail_power_law([&](double x) { return std::abs(g(x)) / x; }, tail_scale);
    if (slope > -1.5)
        throw DivergenceError(
            "spectrum tail decays too slowly for the shift integral "
            "(needs faster than omega^-1.5 roll-off)");

    double val;
    if (omega > 0.0) {
        val = pv_unit_pole(g, splits, quad);
    } else {
        const double x0 = omega / wscale;  // <= 0: no pole on the support
        val = integrate_regular([&](double x) { return g(x) / (x - x0); },
                                splits, quad);
    }
    return Sref / (2.0 * pi) * val;
}

LevelShift level_shift(const TransmonParams& tp, const VoltageSpectrum& S,
                       const QuadratureConfig& quad) {
    tp.validate();
    const double w10 = tp.omega10(), w21 = tp.omega21();
    const double pref = tp.beta() * tp.beta() / (hbar * tp.Z_J());

    double Sref = std::abs(S(w10));
    if (Sref == 0.0) Sref = 1.0;
    std::vector<double> splits;
    for (double f : S.feature_frequencies) splits.push_back(f / w10);

    // In x = omega/omega10 the bracket reads
    //   -[1/(1+x)] / (x - 1) - 1/(omega10 x + omega21)*omega10,
    // using omega10/(omega10^2 - omega^2) = -[omega10/(omega10+omega)]/(omega-omega10).
    auto g_pole = [&](double x) { return -S(x * w10) / Sref / (1.0 + x); };
    auto g_reg = [&](double x) {
        return -S(x * w10) / Sref * w10 / (w10 * x + w21);
    };

    double tail_scale = 1.0;
    for (double s : splits) tail_scale = std::max(tail_scale, s);
    const double slope = tail_power_law(
        [&](double x) { return std::abs(g_pole(x) / x) + std::abs(g_reg(x)); },
        tail_scale);
    if (slope > -1.5)
        throw DivergenceError(
            "spectrum tail decays too slowly for the shift integral "
            "(needs faster than omega^-1.5 roll-off beyond omega10)");

    double I = pv_unit_pole(g_pole, splits, quad);
    I += integrate_regular(g_reg, splits, quad);
    // Undo the scalings: the omega10 Jacobian of x = omega/omega10 cancels
    // against the 1/omega10 carried by the bracket, leaving only Sref.
    LevelShift out;
    out.delta = pref / (2.0 * pi) * Sref * I;
    out.gamma = S(w10) * tp.beta() * tp.beta() / (2.0 * hbar * tp.Z_J());
    return out;
}

std::complex<double> effective_correction(const TransmonParams& tp,
                                          const VoltageSpectrum& S,
                                          int n, int m,
                                          const QuadratureConfig& quad) {
    tp.validate();
    if (n < 0 || n > 2 || m < 0 || m > 2)
        throw Error("levels restricted to n, m in {0, 1, 2}");
    if (n != m) throw Error("only identical (or degenerate) level pairs supported");

    const double w10 = tp.omega10(), w21 = tp.omega21();
    // omega_nn' = (E_n - E_n')/hbar for the nearest neighbors of n.
    auto omega_nn = [&](int a, int b) {
        // transition frequencies: E1-E0 = hbar*w10, E2-E1 = hbar*w21
        double e[3] = {0.0, w10, w10 + w21};
        return e[a] - e[b];
    };

    const double pref = tp.beta() * tp.beta() / hbar;
    std::complex<double> E{0.0, 0.0};
    for (int np : {n - 1, n + 1}) {
        if (np < 0 || np > 2) continue;
        const double Q2 = tp.Q_abs(n, np) * tp.Q_abs(np, n);
        const double w = omega_nn(n, np);
        const double delta_w = spectral_shift_kernel(S, w, quad);
        E += Q2 * std::complex<double>(-delta_w, -0.5 * S(w));
    }
    return pref * E;
}

} // namespace zpf
