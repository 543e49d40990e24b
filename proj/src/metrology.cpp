#include "zpf/metrology.hpp"

#include <cmath>

#include "zpf/constants.hpp"

namespace zpf {

double MechanicalMode::Gamma() const { return Omega / Q; }

void MechanicalMode::validate() const {
    if (!(mass > 0.0) || !(Omega > 0.0) || !(Q > 1.0))
        throw Error("mechanical mode requires mass > 0, Omega > 0, Q > 1");
}

double MeasurementConfig::bandwidth(const MechanicalMode& mode,
                                    bool hz_convention) const {
    double B = bandwidth_B > 0.0 ? bandwidth_B : 0.01 * mode.Gamma();
    if (hz_convention) B /= 2.0 * constants::pi;
    return B;
}

std::vector<std::string> MeasurementConfig::warnings(const MechanicalMode& mode) const {
    std::vector<std::string> w;
    if (bandwidth_B > 0.0 && bandwidth_B >= mode.Gamma())
        w.push_back("bandwidth B should be well below the linewidth Gamma");
    if (modulation_eta > 0.2)
        w.push_back("modulation depth above 0.2: weak-modulation treatment marginal");
    return w;
}

double static_displacement(double force_N, const MechanicalMode& mode) {
    mode.validate();
    return force_N / (mode.mass * mode.Omega * mode.Omega);
}

double dynamic_signal(double x_dc, double Q, double eta) {
    return std::sqrt(constants::pi) * Q * eta * x_dc;
}

double noise_amplitude(double S_N, double B) {
    if (!(S_N > 0.0)) throw Error("noise floor S_N must be positive");
    return std::sqrt(S_N * B);
}

SnrReport snr_report(double force_N, double dforce_dparam, double param,
                     double relative_modulation_u, const MechanicalMode& mode,
                     const MeasurementConfig& cfg, bool hz_convention) {
    mode.validate();
    if (force_N == 0.0)
        throw Error("force vanishes at the working point: modulation "
                    "visibility eta is undefined");
    SnrReport r;
    r.force_N = force_N;
    const double u = relative_modulation_u * param;
    r.eta = u * dforce_dparam / force_N;
    r.x_dc = static_displacement(force_N, mode);
    r.x_s = dynamic_signal(std::abs(r.x_dc), mode.Q, std::abs(r.eta));
    r.x_N = noise_amplitude(cfg.noise_floor_S_N, cfg.bandwidth(mode, hz_convention));
    r.snr = r.x_s / r.x_N;
    return r;
}

} // namespace zpf
