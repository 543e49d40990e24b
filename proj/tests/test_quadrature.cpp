#include "doctest.h"

#include <cmath>

#include "zpf/quadrature.hpp"

using namespace zpf;

TEST_CASE("finite integrals") {
    auto r = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));

    // Integrable endpoint singularity.
    auto s = integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-16, 1.0);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("semi-infinite integrals") {
    auto r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 1.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));

    // Lorentzian with a badly scaled feature, rescued by the scale hint.
    const double w0 = 1e12;
    auto l = integrate_semi_infinite(
        [w0](double x) { return 1.0 / (1.0 + (x / w0) * (x / w0)); }, w0);
    CHECK(l.value == doctest::Approx(M_PI / 2.0 * w0).epsilon(1e-9));
}

TEST_CASE("split points rescue narrow resonances") {
    // Narrow Lorentzian at x0 = 1e6 against scale 1.
    const double x0 = 1e6, g = 1.0;
    auto f = [=](double x) {
        return g / ((x - x0) * (x - x0) + g * g);
    };
    auto r = integrate_semi_infinite(f, 1.0, {}, {x0});
    CHECK(r.value == doctest::Approx(M_PI).epsilon(1e-6));
}

TEST_CASE("panel budget exhaustion is an explicit error") {
    QuadratureConfig tight;
    tight.max_panels = 4;
    tight.rel_tol = 1e-14;
    tight.abs_tol = 1e-300;
    CHECK_THROWS_AS(
        integrate([](double x) { return std::sin(50.0 * x) * std::exp(x); }, 0.0,
                  20.0, tight),
        QuadratureError);
}

TEST_CASE("tail diagnostics") {
    // f ~ x^-3: convergent, slope -3.
    auto f3 = [](double x) { return 1.0 / (1.0 + x * x * x); };
    CHECK(tail_power_law(f3, 1.0) == doctest::Approx(-3.0).epsilon(1e-3));
    // f ~ 1/x: divergent, slope -1.
    auto f1 = [](double x) { return x / (1.0 + x * x); };
    CHECK(tail_power_law(f1, 1.0) == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("tail fraction") {
    // For exp(-x), mass beyond x_max is exp(-x_max).
    auto f = [](double x) { return std::exp(-x); };
    CHECK(tail_fraction(f, 1.0, 3.0) == doctest::Approx(std::exp(-3.0)).epsilon(1e-6));
    CHECK(tail_fraction(f, 1.0, 30.0) < 1e-12);
}
