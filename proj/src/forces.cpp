#include "zpf/forces.hpp"

#include <cmath>

#include "zpf/constants.hpp"

namespace zpf {

CapacitorGeometry CapacitorGeometry::parallel_plate(double area) {
    if (!(area > 0.0)) throw Error("plate area must be positive");
    const double Ae = area * constants::eps0;
    CapacitorGeometry g;
    g.C_of_xi = [Ae](double y) {
        if (!(y > 0.0)) throw Error("plate separation must be positive");
        return Ae / y;
    };
    g.dC_dxi = [Ae](double y) { return -Ae / (y * y); };
    return g;
}

CapacitorGeometry CapacitorGeometry::from_diameter(double d) {
    return parallel_plate(constants::pi * 0.25 * d * d);
}

CapacitorGeometry CapacitorGeometry::user(std::function<double(double)> C,
                                          std::function<double(double)> dCdxi) {
    CapacitorGeometry g;
    g.C_of_xi = std::move(C);
    g.dC_dxi = std::move(dCdxi);
    return g;
}

EnergyModel EnergyModel::from_network(CircuitNetwork net, QuadratureConfig quad) {
    EnergyModel m;
    m.U_of_C = [net, quad](double C) {
        return energy_renormalized(net, C, quad).energy;
    };
    m.dU_dC = nullptr;
    return m;
}

EnergyModel EnergyModel::closed_I(double R, double C0) {
    EnergyModel m;
    m.U_of_C = [R, C0](double C) { return closed_form_I(R, C0, C); };
    m.dU_dC = [R, C0](double C) { return closed_form_I_dC(R, C0, C); };
    return m;
}

EnergyModel EnergyModel::closed_II(double R, double L) {
    EnergyModel m;
    m.U_of_C = [R, L](double C) { return closed_form_II(R, L, C); };
    m.dU_dC = [R, L](double C) { return closed_form_II_dC(R, L, C); };
    return m;
}

EnergyModel EnergyModel::closed_III(double R, double L) {
    EnergyModel m;
    m.U_of_C = [R, L](double C) { return closed_form_III(R, L, C); };
    m.dU_dC = [R, L](double C) { return closed_form_III_dC(R, L, C); };
    return m;
}

EnergyModel EnergyModel::closed_IV(double R, double L, double C0,
                                   QuadratureConfig quad) {
    EnergyModel m;
    m.U_of_C = [=](double C) { return closed_form_IV(R, L, C0, C, quad); };
    m.dU_dC = nullptr;
    return m;
}

namespace {

/// Central 5-point derivative of F at x with one Richardson step.
double stencil5(const std::function<double(double)>& F, double x, double h) {
    return (F(x - 2 * h) - 8.0 * F(x - h) + 8.0 * F(x + h) - F(x + 2 * h)) /
           (12.0 * h);
}

double fd_derivative(const std::function<double(double)>& F, double x) {
    double h = std::max(std::abs(x) * 1e-4, 1e-12);
    const double d1 = stencil5(F, x, h);
    const double d2 = stencil5(F, x, 0.5 * h);
    // 5-point stencil error is O(h^4): Richardson weight 16/15.
    const double richardson = (16.0 * d2 - d1) / 15.0;
    if (!std::isfinite(richardson))
        throw Error("finite-difference step underflow");
    return richardson;
}

} // namespace

double force(const EnergyModel& model, const CapacitorGeometry& geom, double xi,
             ForceMethod method) {
    if (method == ForceMethod::Analytic && model.dU_dC) {
        const double C = geom.C_of_xi(xi);
        return -model.dU_dC(C) * geom.dC_dxi(xi);
    }
    auto U_of_xi = [&](double x) { return model.U_of_C(geom.C_of_xi(x)); };
    return -fd_derivative(U_of_xi, xi);
}

ForceSweep sweep_force(const std::string& param_name,
                       const std::vector<double>& grid,
                       const std::function<EnergyModel(double)>& make_model,
                       const std::function<std::pair<CapacitorGeometry, double>(double)>& geom_at,
                       ForceMethod method) {
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw Error("sweep grid must be strictly increasing");
    ForceSweep sweep;
    sweep.param_name = param_name;
    for (double p : grid) {
        SweepPoint pt;
        pt.param = p;
        try {
            auto [geom, xi] = geom_at(p);
            pt.force_N = force(make_model(p), geom, xi, method);
        } catch (const std::exception& e) {
            pt.valid = false;
            pt.error = e.what();
        }
        sweep.points.push_back(pt);
    }
    return sweep;
}

AsymptoticFit asymptotic_slope(const ForceSweep& sweep) {
    std::vector<double> lx, ly;
    for (const auto& p : sweep.points) {
        if (!p.valid || p.force_N == 0.0) continue;
        lx.push_back(std::log(p.param));
        ly.push_back(std::log(std::abs(p.force_N)));
    }
    if (lx.size() < 3) throw Error("asymptotic fit needs at least 3 valid points");
    for (size_t i = 2; i < ly.size(); ++i)
        if ((ly[i] - ly[i - 1]) * (ly[i - 1] - ly[i - 2]) < 0.0)
            throw Error("|f| non-monotonic in the fit window");
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= lx.size();
    my /= ly.size();
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = num / den;
    double maxres = 0.0;
    for (size_t i = 0; i < lx.size(); ++i)
        maxres = std::max(maxres,
                          std::abs(ly[i] - (my + slope * (lx[i] - mx))));
    return {slope, maxres};
}

double log_over_y2_residual(const ForceSweep& sweep) {
    // Fit f*y^2 = alpha + beta*ln(y) by least squares, report max relative
    // residual of the affine model.
    std::vector<double> x, v;
    for (const auto& p : sweep.points) {
        if (!p.valid) continue;
        x.push_back(std::log(p.param));
        v.push_back(p.force_N * p.param * p.param);
    }
    if (x.size() < 3) throw Error("fit needs at least 3 valid points");
    double mx = 0.0, mv = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        mv += v[i];
    }
    mx /= x.size();
    mv /= v.size();
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (v[i] - mv);
        den += (x[i] - mx) * (x[i] - mx);
    }
    const double beta = num / den;
    double maxrel = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double fit = mv + beta * (x[i] - mx);
        maxrel = std::max(maxrel, std::abs(v[i] - fit) / std::abs(fit));
    }
    return maxrel;
}

} // namespace zpf
