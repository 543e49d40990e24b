#pragma once

#include <string>
#include <vector>

#include "zpf/errors.hpp"

namespace zpf {

struct MechanicalMode {
    double mass = 0.0;      // kg
    double Omega = 0.0;     // rad/s
    double Q = 0.0;         // dimensionless

    double Gamma() const;   // Omega / Q, rad/s
    void validate() const;  // positive, Q > 1
};

struct MeasurementConfig {
    double noise_floor_S_N = 0.0;  // m^2/Hz
    double bandwidth_B = 0.0;      // s^-1; 0 means "use 0.01 * Gamma"
    double modulation_eta = 0.05;  // dimensionless

    /// Resolves the default B = 0.01 Gamma. The numeric convention treats
    /// Gamma (rad/s) as a plain s^-1 factor inside x_N = sqrt(S_N B); a
    /// Hz-based convention would divide by 2 pi (about 2.5x smaller x_N).
    double bandwidth(const MechanicalMode& mode, bool hz_convention = false) const;

    std::vector<std::string> warnings(const MechanicalMode& mode) const;
};

/// Static displacement x_dc = f / (m Omega^2).
double static_displacement(double force_N, const MechanicalMode& mode);

/// Resonant dynamic-modulation signal x_s = sqrt(pi) Q eta x_dc.
double dynamic_signal(double x_dc, double Q, double eta);

/// Noise amplitude x_N = sqrt(S_N B).
double noise_amplitude(double S_N, double B);

struct SnrReport {
    double force_N = 0.0;
    double eta = 0.0;
    double x_dc = 0.0;
    double x_s = 0.0;
    double x_N = 0.0;
    double snr = 0.0;
};

/// Full chain for a working point: given the force f and its logarithmic
/// sensitivity df/dZ to the modulated parameter Z (modulation depth
/// u = eta_u * Z), eta = u (df/dZ)/f. Throws when f = 0 (eta undefined).
SnrReport snr_report(double force_N, double dforce_dparam, double param,
                     double relative_modulation_u, const MechanicalMode& mode,
                     const MeasurementConfig& cfg, bool hz_convention = false);

} // namespace zpf
