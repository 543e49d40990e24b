#pragma once

#include <functional>
#include <vector>

#include "zpf/errors.hpp"

namespace zpf {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-10;
    int max_panels = 10000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;   // estimated
    int panels = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
/// `split_points` (strictly inside (a,b)) become initial panel boundaries,
/// used to straddle known sharp features such as resonances or PV poles.
/// Throws QuadratureError when the panel budget is exhausted before the
/// tolerance target is met.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b,
                           const QuadratureConfig& cfg = {},
                           const std::vector<double>& split_points = {});

/// Integrates f over (0, infinity) via the map x = t/(1-t). `scale` sets
/// the characteristic abscissa: the substitution is x = scale * t/(1-t),
/// so features near x ~ scale land near t ~ 1/2. `split_x` are feature
/// abscissae in the original variable.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double scale,
                                         const QuadratureConfig& cfg = {},
                                         const std::vector<double>& split_x = {});

/// Fraction of |integral| of f accumulated beyond x_max, i.e.
/// |int_{x_max}^inf f| / |int_0^inf f|. Used for cutoff diagnostics.
double tail_fraction(const std::function<double(double)>& f,
                     double scale, double x_max,
                     const QuadratureConfig& cfg = {});

/// Fits a local log-log power law to |f| at x = 102, 103, 104 (times scale)
/// and returns the slope. Decay slower than x^-1.5 signals a divergent
/// zero-point integral needing renormalization.
double tail_power_law(const std::function<double(double)>& f, double scale);

} // namespace zpf
