#include "zpf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace zpf {

namespace {

// Kronrod-15 abscissae on [0,1] (positive half) and weights; the embedded
// Gauss-7 rule uses the odd-indexed Kronrod points.
constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelEstimate {
    double value;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * xgk[i];
        const double fv = (i == 7) ? f(c) : f(c - dx) + f(c + dx);
        resk += wgk[i] * fv;
        if (i % 2 == 1) resg += wg[i / 2] * fv;  // odd indices are Gauss-7 nodes
    }
    return {resk * h, std::abs(resk - resg) * h};
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b,
                           const QuadratureConfig& cfg,
                           const std::vector<double>& split_points) {
    std::vector<double> bounds{a};
    for (double s : split_points)
        if (s > a && s < b) bounds.push_back(s);
    bounds.push_back(b);
    std::sort(bounds.begin(), bounds.end());

    std::priority_queue<Panel> heap;
    double total = 0.0, toterr = 0.0;
    int panels = 0;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        auto est = gk15(f, bounds[i], bounds[i + 1]);
        heap.push({bounds[i], bounds[i + 1], est.value, est.error});
        total += est.value;
        toterr += est.error;
        ++panels;
    }
    while (toterr > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (panels >= cfg.max_panels)
            throw QuadratureError("panel budget exhausted (" +
                                  std::to_string(cfg.max_panels) +
                                  ") with error estimate " + std::to_string(toterr));
        Panel p = heap.top();
        heap.pop();
        const double m = 0.5 * (p.a + p.b);
        auto l = gk15(f, p.a, m);
        auto r = gk15(f, m, p.b);
        total += l.value + r.value - p.value;
        toterr += l.error + r.error - p.error;
        heap.push({p.a, m, l.value, l.error});
        heap.push({m, p.b, r.value, r.error});
        ++panels;
    }
    return {total, toterr, panels};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double scale,
                                         const QuadratureConfig& cfg,
                                         const std::vector<double>& split_x) {
    if (!(scale > 0.0)) throw QuadratureError("scale must be positive");
    // The absolute tolerance is meant in the dimensionless variable x/scale;
    // without this the roundoff noise floor of large-scale (e.g. rad/s)
    // integrals sits above abs_tol and the refinement never terminates.
    QuadratureConfig scaled = cfg;
    scaled.abs_tol = cfg.abs_tol * scale;
    auto g = [&f, scale](double t) {
        const double om = 1.0 - t;
        const double x = scale * t / om;
        return f(x) * scale / (om * om);
    };
    std::vector<double> splits;
    for (double x : split_x) {
        if (!(x > 0.0)) continue;
        const double u = x / scale;
        splits.push_back(u / (1.0 + u));
    }
    // Tiny inset from the endpoints avoids evaluating exactly at x=0 or the
    // mapped infinity; the integrand is assumed integrable there.
    return integrate(g, 1e-300, 1.0 - 1e-14, scaled, splits);
}

double tail_fraction(const std::function<double(double)>& f,
                     double scale, double x_max,
                     const QuadratureConfig& cfg) {
    auto whole = integrate_semi_infinite(f, scale, cfg);
    if (whole.value == 0.0) return 0.0;
    const double t_max = (x_max / scale) / (1.0 + x_max / scale);
    auto g = [&f, scale](double t) {
        const double om = 1.0 - t;
        const double x = scale * t / om;
        return f(x) * scale / (om * om);
    };
    QuadratureConfig scaled = cfg;
    scaled.abs_tol = cfg.abs_tol * scale;
    auto tail = integrate(g, t_max, 1.0 - 1e-14, scaled);
    return std::min(1.0, std::abs(tail.value) / std::abs(whole.value));
}

double tail_power_law(const std::function<double(double)>& f, double scale) {
    const double xs[3] = {1e2 * scale, 1e3 * scale, 1e4 * scale};
    double lx[3], ly[3];
    for (int i = 0; i < 3; ++i) {
        const double v = std::abs(f(xs[i]));
        if (v == 0.0) return -1e9;  // identically-zero tail: converges
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(v);
    }
    // Least-squares slope through three points.
    const double mx = (lx[0] + lx[1] + lx[2]) / 3.0;
    const double my = (ly[0] + ly[1] + ly[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

} // namespace zpf
