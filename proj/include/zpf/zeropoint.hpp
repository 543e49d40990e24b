#pragma once

#include "zpf/circuit.hpp"
#include "zpf/quadrature.hpp"

namespace zpf {

struct ZeroPointResult {
    double energy = 0.0;                     // joules
    bool renormalized = false;
    bool reference_energy_defined = false;   // reference reduced to zero energy
    double abs_error_estimate = 0.0;         // joules
    double tail_fraction_beyond_cutoff = 0.0;
    bool validity_ok = true;
};

struct ValidityParams {
    double element_size_l = 1e-5;  // meters
    double omega_max() const;      // c / l
};

/// Zero-point integrand at angular frequency omega for a probed capacitor C
/// attached to impedance Z = R + iX (engineering sign convention):
///   g(omega) = R C omega / [(1 - X C omega)^2 + (R C omega)^2].
/// U = hbar * int_0^inf (domega/2pi) g(omega).
double zero_point_integrand(const std::complex<double>& Z, double C, double omega);

/// Characteristic time for quadrature conditioning: geometric mean of the
/// element time constants, falling back to 1e-9 s when none exist.
double characteristic_time(const std::vector<double>& time_constants);

/// Raw (unrenormalized) energy integral. Throws DivergenceError when the
/// integrand tail decays slower than omega^-1.5 (e.g. circuits I and III).
ZeroPointResult energy_raw(const PortImpedance& Z, double C,
                           const QuadratureConfig& quad = {},
                           const ValidityParams& vp = {});

/// Renormalized energy: integrates the single difference integrand
/// g_net - g_reference (capacitors shorted, inductors removed) rather than
/// subtracting two divergent integrals.
ZeroPointResult energy_renormalized(const CircuitNetwork& net, double C,
                                    const QuadratureConfig& quad = {},
                                    const ValidityParams& vp = {});

/// Closed forms for the four canonical circuits. I: R in series with C0.
/// II: R in series with L. III: R in parallel with L. IV: (R in series
/// with C0) in parallel with L. All renormalized; IV evaluated by a
/// convergent one-dimensional integral in scaled variables.
double closed_form_I(double R, double C0, double C);
double closed_form_II(double R, double L, double C);
double closed_form_III(double R, double L, double C);
double closed_form_IV(double R, double L, double C0, double C,
                      const QuadratureConfig& quad = {});

/// Analytic dU/dC for the closed forms (used by the forces module).
double closed_form_I_dC(double R, double C0, double C);
double closed_form_II_dC(double R, double L, double C);
double closed_form_III_dC(double R, double L, double C);

struct ValidityReport {
    bool validity_ok = false;
    double tail_fraction = 1.0;
};

/// Fraction of the (possibly renormalized) |integral| accumulated beyond
/// omega_max = c/l; validity_ok iff below 1e-2.
ValidityReport check_validity(const CircuitNetwork& net, double C,
                              const ValidityParams& vp = {},
                              const QuadratureConfig& quad = {});

} // namespace zpf
