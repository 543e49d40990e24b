#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "zpf/circuit.hpp"
#include "zpf/quadrature.hpp"

namespace zpf {

/// Transmon parameters. Energies in joules, capacitances in farads.
struct TransmonParams {
    double E_C = 0.0;
    double E_J = 0.0;
    double C_g = 0.0;
    double C_J = 0.0;

    double beta() const { return C_g / C_J; }
    double omega0() const;    // sqrt(8 E_C E_J)/hbar
    double omega10() const;   // omega0 - E_C/hbar
    double omega21() const;   // omega0 - 2 E_C/hbar
    double Z_J() const;       // (hbar/e^2) sqrt(E_C / (2 E_J))

    /// Charge matrix element |<n|Q|n'>| in coulombs; nonzero only for
    /// n' = n +/- 1.
    double Q_abs(int n, int nprime) const;

    /// Soft regime checks: E_J/E_C < 20 or beta > 0.2.
    std::vector<std::string> warnings() const;
    void validate() const;  // throws on non-positive inputs
};

/// One-sided (T = 0) voltage noise spectrum at the coupling node, V^2 s.
struct VoltageSpectrum {
    std::function<double(double)> S;
    bool one_sided = true;
    std::vector<double> feature_frequencies;  // quadrature split points
    std::string warning;                      // e.g. dissipation-free network

    double operator()(double omega) const {
        if (one_sided && omega <= 0.0) return 0.0;
        return S(omega);
    }
};

/// Node voltage spectrum of a network: sum over resistors of
/// S_IN,k(omega) |Z_transfer,k(omega)|^2 at T = 0, evaluated without the
/// qubit loading (weak-coupling limit C_g -> 0). The "node" is the
/// network's port pair.
VoltageSpectrum node_spectrum(const CircuitNetwork& net);

struct LevelShift {
    double delta = 0.0;  // rad/s
    double gamma = 0.0;  // rad/s
};

/// Qubit transition shift and linewidth:
///   delta = (beta^2/(hbar Z_J)) Int_0^inf (domega/2pi) S(omega)
///           [ P omega10/(omega10^2 - omega^2) - 1/(omega + omega21) ],
///   gamma = S(omega10) beta^2 / (2 hbar Z_J).
/// The principal value uses pole subtraction on a symmetric window.
/// Throws DivergenceError when the spectrum lacks the needed roll-off.
LevelShift level_shift(const TransmonParams& tp, const VoltageSpectrum& S,
                       const QuadratureConfig& quad = {});

/// Kramers-Kronig-type level-shift kernel:
///   Delta(omega) = (1/2pi) P Int_0^inf domega' S(omega') / (omega' - omega).
/// Regular integral for omega <= 0 (outside the one-sided support).
double spectral_shift_kernel(const VoltageSpectrum& S, double omega,
                             const QuadratureConfig& quad = {});

/// Second-order non-Hermitian correction E^(2)_nm (joules) for levels
/// n, m in {0, 1, 2}:
///   E^(2)_nm = (beta^2/hbar) sum_n' Q_nn' Q_n'm
///              [ -Delta(omega_nn') - (i/2) S(omega_nn') ],
/// nearest-neighbor n' only. delta = Re{E_11 - E_00}/hbar and
/// gamma = -2 Im{E_11}/hbar reproduce level_shift.
std::complex<double> effective_correction(const TransmonParams& tp,
                                          const VoltageSpectrum& S,
                                          int n, int m,
                                          const QuadratureConfig& quad = {});

} // namespace zpf
