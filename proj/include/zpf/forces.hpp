#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zpf/circuit.hpp"
#include "zpf/zeropoint.hpp"

namespace zpf {

/// Maps a mechanical coordinate xi to the probe capacitance. Sign
/// convention: f = -dU/dxi, so f > 0 means the potential decreases as xi
/// grows (repulsive for a plate-separation coordinate).
struct CapacitorGeometry {
    std::function<double(double)> C_of_xi;
    std::function<double(double)> dC_dxi;

    /// Parallel plates of area A: C = A eps0 / y, dC/dy = -A eps0 / y^2.
    static CapacitorGeometry parallel_plate(double area);
    static CapacitorGeometry from_diameter(double d);
    static CapacitorGeometry user(std::function<double(double)> C,
                                  std::function<double(double)> dCdxi);
};

enum class ForceMethod { Analytic, FiniteDifference };

/// Energy model: dimensionless parametrization of U(C). Built either from a
/// closed form (with analytic dU/dC) or from renormalized quadrature on a
/// network.
struct EnergyModel {
    std::function<double(double)> U_of_C;
    std::function<double(double)> dU_dC;  // may be null (forces FD fallback)

    static EnergyModel from_network(CircuitNetwork net, QuadratureConfig quad = {});
    static EnergyModel closed_I(double R, double C0);
    static EnergyModel closed_II(double R, double L);
    static EnergyModel closed_III(double R, double L);
    static EnergyModel closed_IV(double R, double L, double C0,
                                 QuadratureConfig quad = {});
};

/// Generalized force f = -(dU/dC)(dC/dxi) at coordinate xi.
/// The finite-difference path uses a central 5-point stencil on U(C(xi))
/// with Richardson refinement.
double force(const EnergyModel& model, const CapacitorGeometry& geom, double xi,
             ForceMethod method = ForceMethod::Analytic);

struct SweepPoint {
    double param = 0.0;
    double force_N = 0.0;
    bool valid = true;          // numerical evaluation succeeded
    bool renormalized = true;
    std::string error;          // set when valid is false
};

struct ForceSweep {
    std::string param_name;
    std::vector<SweepPoint> points;
    /// True when varying the swept parameter changes the reference
    /// circuit's contribution (e.g. circuit I vs R: yes; vs C0: no).
    bool reference_contribution_varies = false;
};

/// Sweeps the force over a parameter grid. `make_model` builds the energy
/// model for each parameter value; `geom_at` gives geometry/coordinate per
/// value (constant for circuit-parameter sweeps, or the coordinate itself
/// when sweeping y). Per-point failures are recorded, the sweep continues.
ForceSweep sweep_force(const std::string& param_name,
                       const std::vector<double>& grid,
                       const std::function<EnergyModel(double)>& make_model,
                       const std::function<std::pair<CapacitorGeometry, double>(double)>& geom_at,
                       ForceMethod method = ForceMethod::Analytic);

struct AsymptoticFit {
    double slope = 0.0;           // of log|f| vs log y
    double max_residual = 0.0;    // max |log|f| - fit| over the window
};

/// Least-squares slope of log|f| vs log y. Throws when |f| is
/// non-monotonic over the fit window.
AsymptoticFit asymptotic_slope(const ForceSweep& sweep);

/// Affine fit f*y^2 = alpha + beta*ln y over the sweep; returns the
/// maximum relative residual (the circuit-III long-distance law).
double log_over_y2_residual(const ForceSweep& sweep);

} // namespace zpf
