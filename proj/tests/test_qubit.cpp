#include "doctest.h"

#include <cmath>

#include "zpf/builtin.hpp"
#include "zpf/constants.hpp"
#include "zpf/qubit.hpp"

using namespace zpf;
using constants::e_charge;
using constants::hbar;
using constants::pi;

namespace {

/// Transmon with omega0 = 2 pi * 5 GHz, deep E_J/E_C so that the small-b
/// closed forms (which ignore the omega10/omega0 distinction) apply.
TransmonParams deep_transmon(double beta = 0.1, double ej_over_ec = 5000.0) {
    TransmonParams tp;
    const double omega0 = 2.0 * pi * 5e9;
    // omega0 = sqrt(8 E_C E_J)/hbar with E_J = k E_C.
    tp.E_C = hbar * omega0 / std::sqrt(8.0 * ej_over_ec);
    tp.E_J = ej_over_ec * tp.E_C;
    tp.C_J = 1e-13;
    tp.C_g = beta * tp.C_J;
    return tp;
}

} // namespace

TEST_CASE("transmon derived quantities") {
    auto tp = deep_transmon();
    CHECK(tp.omega0() == doctest::Approx(2.0 * pi * 5e9).epsilon(1e-12));
    CHECK(tp.omega10() < tp.omega0());
    CHECK(tp.omega21() < tp.omega10());
    CHECK(tp.Z_J() ==
          doctest::Approx(hbar / (e_charge * e_charge) *
                          std::sqrt(tp.E_C / (2.0 * tp.E_J))).epsilon(1e-12));
    // Charge matrix element sum rule: |Q01|^2/(2e)^2 = sqrt(E_J/8E_C)/2.
    const double q01 = tp.Q_abs(0, 1);
    CHECK(q01 * q01 / (4.0 * e_charge * e_charge) ==
          doctest::Approx(std::sqrt(tp.E_J / (8.0 * tp.E_C)) / 2.0).epsilon(1e-12));
    // Nearest-neighbor only.
    CHECK(tp.Q_abs(0, 2) == 0.0);
    // |Q12|^2 = 2 |Q01|^2.
    CHECK(tp.Q_abs(1, 2) * tp.Q_abs(1, 2) ==
          doctest::Approx(2.0 * q01 * q01).epsilon(1e-12));
}

TEST_CASE("transmon regime warnings") {
    auto tp = deep_transmon();
    CHECK(tp.warnings().empty());
    tp.E_J = 10.0 * tp.E_C;
    CHECK(tp.warnings().size() == 1);
    tp.C_g = 0.5 * tp.C_J;
    CHECK(tp.warnings().size() == 2);
}

TEST_CASE("node spectrum of parallel RC") {
    const double R = 50.0, C = 1e-13;
    auto S = node_spectrum(builtin::parallel_RC(R, C));
    for (double w : {1e8, 1e10, 1e12}) {
        const double expect = 2.0 * hbar * w * R / (1.0 + w * w * C * C * R * R);
        CHECK(S(w) == doctest::Approx(expect).epsilon(1e-10));
    }
    CHECK(S(-1e10) == 0.0);  // one-sided at T = 0
    // C -> 0 limit: bare resistor spectrum.
    auto Sbare = node_spectrum(builtin::parallel_RC(R, 1e-25));
    CHECK(Sbare(1e10) == doctest::Approx(2.0 * hbar * 1e10 * R).epsilon(1e-6));
}

TEST_CASE("dissipation-free network yields zero spectrum with warning") {
    CircuitNetwork lc({{ElementKind::Inductor, "L1", "a", "gnd", 1e-9},
                       {ElementKind::Capacitor, "C1", "a", "gnd", 1e-12}},
                      "a", "gnd");
    auto S = node_spectrum(lc);
    CHECK(S(1e9) == 0.0);
    CHECK(!S.warning.empty());
}

TEST_CASE("principal-value kernel against a closed-form oracle") {
    // S(omega) = S0 on (0, Wc): Delta(w) = (S0/2pi) P int_0^Wc dw'/(w'-w)
    //          = (S0/2pi) ln|(Wc-w)/w| for 0 < w < Wc.
    const double Wc = 1e10, S0 = 1e-30;
    VoltageSpectrum S;
    S.S = [=](double w) { return (w > 0.0 && w < Wc) ? S0 : 0.0; };
    S.feature_frequencies = {Wc};
    for (double w : {0.3e10, 0.5e10 * 0.9999, 0.7e10}) {
        const double expect = S0 / (2.0 * pi) * std::log(std::abs((Wc - w) / w));
        const double got = spectral_shift_kernel(S, w);
        CHECK(got == doctest::Approx(expect).epsilon(1e-8));
    }
    // Negative argument: pole outside the support, plain integral
    // (S0/2pi) ln((Wc+|w|)/|w|).
    const double w = -0.4e10;
    const double expect = S0 / (2.0 * pi) * std::log((Wc - w) / (-w));
    CHECK(spectral_shift_kernel(S, w) == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("small-b closed form for the parallel RC circuit") {
    auto tp = deep_transmon();
    const double w0 = tp.omega0(), R = 50.0;
    const double b = 1e-3, C = b / (w0 * R);
    auto S = node_spectrum(builtin::parallel_RC(R, C));
    auto shift = level_shift(tp, S);
    const double beta = tp.beta();
    const double delta_approx = -w0 * (R / tp.Z_J()) * beta * beta / (2.0 * b);
    CHECK(shift.delta == doctest::Approx(delta_approx).epsilon(0.01));
    // |delta|/gamma = 1/(2b) within 5%.
    CHECK(std::abs(shift.delta) / shift.gamma ==
          doctest::Approx(1.0 / (2.0 * b)).epsilon(0.05));
    CHECK(shift.gamma >= 0.0);
}

TEST_CASE("shift scales as beta squared") {
    const double R = 50.0, C = 1e-13;
    auto S = node_spectrum(builtin::parallel_RC(R, C));
    auto d1 = level_shift(deep_transmon(0.05), S).delta;
    auto d2 = level_shift(deep_transmon(0.10), S).delta;
    CHECK(d2 / d1 == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("bare resistor spectrum is rejected as divergent") {
    auto tp = deep_transmon();
    VoltageSpectrum S;
    S.S = [](double w) { return w > 0.0 ? 2.0 * hbar * w * 50.0 : 0.0; };
    CHECK_THROWS_AS(level_shift(tp, S), DivergenceError);
}

TEST_CASE("effective correction reproduces level_shift") {
    auto tp = deep_transmon();
    const double R = 50.0, C = 5e-13;
    auto S = node_spectrum(builtin::parallel_RC(R, C));
    auto shift = level_shift(tp, S);
    auto E11 = effective_correction(tp, S, 1, 1);
    auto E00 = effective_correction(tp, S, 0, 0);
    const double delta2 = (E11.real() - E00.real()) / hbar;
    const double gamma2 = -2.0 * E11.imag() / hbar;
    CHECK(delta2 == doctest::Approx(shift.delta).epsilon(1e-8));
    CHECK(gamma2 == doctest::Approx(shift.gamma).epsilon(1e-10));
}

TEST_CASE("level restriction") {
    auto tp = deep_transmon();
    auto S = node_spectrum(builtin::parallel_RC(50.0, 1e-13));
    CHECK_THROWS_AS(effective_correction(tp, S, 3, 3), Error);
    CHECK_THROWS_AS(effective_correction(tp, S, 0, 1), Error);
}
