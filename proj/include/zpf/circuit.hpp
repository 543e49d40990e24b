#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "zpf/errors.hpp"

namespace zpf {

enum class ElementKind { Resistor, Capacitor, Inductor };

/// One two-terminal linear element. Values are SI (ohm, farad, henry),
/// strictly positive and finite; an element never connects a node to itself.
struct Element {
    ElementKind kind;
    std::string name;   // unique within a network ("R1", "C0", ...)
    std::string node_a;
    std::string node_b;
    double value;
};

/// Immutable element-graph description of a linear two-terminal network.
/// The probed capacitor C is *not* part of the network; `port_a`/`port_b`
/// name the pair of nodes it attaches to. `gnd` is the reserved ground.
class CircuitNetwork {
public:
    CircuitNetwork(std::vector<Element> elements,
                   std::string port_a, std::string port_b);

    const std::vector<Element>& elements() const { return elements_; }
    const std::string& port_a() const { return port_a_; }
    const std::string& port_b() const { return port_b_; }
    const std::vector<std::string>& nodes() const { return node_names_; }

    bool has_resistor() const;
    bool has_reactive() const;

    /// Element time constants (RC, L/R, sqrt(LC)) for every R/L/C pairing,
    /// including the externally probed capacitance when given (> 0).
    std::vector<double> time_constants(double probed_C = 0.0) const;

private:
    std::vector<Element> elements_;
    std::string port_a_, port_b_;
    std::vector<std::string> node_names_;
    void validate() const;
};

/// Complex port impedance at angular frequency omega (rad/s), from a dense
/// complex modified-nodal-analysis solve. Engineering sign convention:
/// Z_L = i*omega*L, Z_C = 1/(i*omega*C). Works for omega of either sign
/// (and satisfies Z(-omega) = conj Z(omega)).
std::complex<double> evaluate_impedance(const CircuitNetwork& net, double omega);

/// Transfer impedances from each resistor's noise-current source to the
/// port voltage: entry k is V_port per unit current injected across
/// resistor k. Resistor order follows net.elements().
std::vector<std::complex<double>> noise_transfer_impedances(const CircuitNetwork& net,
                                                            double omega);

enum class ReferenceKind {
    Network,      // a nontrivial (resistive) network remains
    OpenCircuit,  // port disconnected: reference energy is zero
    ShortedPort,  // port nodes merged: zero voltage across the probe
};

/// High-frequency reference of a network: capacitors shorted (node merge),
/// inductors removed, dangling branches pruned.
struct ReferenceCircuit {
    ReferenceKind kind;
    CircuitNetwork network;   // meaningful only when kind == Network
};

ReferenceCircuit reference_network(const CircuitNetwork& net);

/// Current-noise spectrum of a resistor R at temperature T (in energy
/// units, J): S_IN = (2 hbar omega / R) / (1 - exp(-hbar omega / T)).
/// At T = 0: 2 hbar omega / R for omega > 0, 0 for omega < 0.
double noise_spectrum(double R, double omega, double T);

/// Evaluable port impedance omega -> Z. Carries the element time constants
/// needed to condition downstream quadrature.
struct PortImpedance {
    std::function<std::complex<double>(double)> eval;
    std::vector<double> time_constants;

    enum class Provenance { Network, AnalyticForm } provenance =
        Provenance::AnalyticForm;

    std::complex<double> operator()(double omega) const { return eval(omega); }

    static PortImpedance from_network(const CircuitNetwork& net, double probed_C = 0.0);
};

} // namespace zpf
