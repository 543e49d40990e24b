#include "zpf/circuit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "zpf/constants.hpp"

namespace zpf {

namespace {

using Cplx = std::complex<double>;

std::map<std::string, int> index_nodes(const std::vector<Element>& elems,
                                       const std::string& pa, const std::string& pb) {
    std::map<std::string, int> idx;
    auto add = [&](const std::string& n) {
        if (!idx.count(n)) idx.emplace(n, static_cast<int>(idx.size()));
    };
    add(pa);
    add(pb);
    for (const auto& e : elems) {
        add(e.node_a);
        add(e.node_b);
    }
    return idx;
}

/// Connected component of `start` over element edges.
std::set<std::string> component_of(const std::vector<Element>& elems,
                                   const std::string& start) {
    std::set<std::string> seen{start};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : elems) {
            bool a = seen.count(e.node_a), b = seen.count(e.node_b);
            if (a != b) {
                seen.insert(a ? e.node_b : e.node_a);
                grew = true;
            }
        }
    }
    return seen;
}

Cplx element_admittance(const Element& e, double omega) {
    switch (e.kind) {
        case ElementKind::Resistor: return Cplx(1.0 / e.value, 0.0);
        case ElementKind::Capacitor: return Cplx(0.0, omega * e.value);
        case ElementKind::Inductor: return Cplx(0.0, -1.0 / (omega * e.value));
    }
    return {};
}

/// Solves Y v = rhs with the port_b row/column removed (reference node).
/// Throws IsolatedPoleError when the matrix is numerically singular.
Eigen::VectorXcd solve_nodal(const CircuitNetwork& net, double omega,
                             const std::map<std::string, int>& idx,
                             const Eigen::VectorXcd& rhs_full) {
    const int n = static_cast<int>(idx.size());
    const int ref = idx.at(net.port_b());
    Eigen::MatrixXcd Y = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& e : net.elements()) {
        const Cplx y = element_admittance(e, omega);
        const int a = idx.at(e.node_a), b = idx.at(e.node_b);
        Y(a, a) += y;
        Y(b, b) += y;
        Y(a, b) -= y;
        Y(b, a) -= y;
    }
    // Drop the reference row/column.
    Eigen::MatrixXcd Yr(n - 1, n - 1);
    Eigen::VectorXcd rhs(n - 1);
    for (int i = 0, ii = 0; i < n; ++i) {
        if (i == ref) continue;
        rhs(ii) = rhs_full(i);
        for (int j = 0, jj = 0; j < n; ++j) {
            if (j == ref) continue;
            Yr(ii, jj++) = Y(i, j);
        }
        ++ii;
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(Yr);
    lu.setThreshold(1e-13);
    if (!lu.isInvertible())
        throw IsolatedPoleError("admittance matrix singular at omega = " +
                                std::to_string(omega) + " rad/s (isolated pole)");
    Eigen::VectorXcd v_red = lu.solve(rhs);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    for (int i = 0, ii = 0; i < n; ++i)
        if (i != ref) v(i) = v_red(ii++);
    return v;
}

} // namespace

CircuitNetwork::CircuitNetwork(std::vector<Element> elements,
                               std::string port_a, std::string port_b)
    : elements_(std::move(elements)),
      port_a_(std::move(port_a)),
      port_b_(std::move(port_b)) {
    validate();
    std::set<std::string> names{port_a_, port_b_};
    for (const auto& e : elements_) {
        names.insert(e.node_a);
        names.insert(e.node_b);
    }
    node_names_.assign(names.begin(), names.end());
}

void CircuitNetwork::validate() const {
    if (elements_.empty()) throw TopologyError("network has no elements");
    if (port_a_ == port_b_) throw TopologyError("port nodes are identical");
    std::set<std::string> names;
    for (const auto& e : elements_) {
        if (!(e.value > 0.0) || !std::isfinite(e.value))
            throw TopologyError("element " + e.name + " has non-positive or non-finite value");
        if (e.node_a == e.node_b)
            throw TopologyError("element " + e.name + " connects a node to itself");
        if (!names.insert(e.name).second)
            throw TopologyError("duplicate element name " + e.name);
    }
    auto comp = component_of(elements_, port_a_);
    if (!comp.count(port_b_))
        throw TopologyError("port nodes are not connected through the network");
}

bool CircuitNetwork::has_resistor() const {
    return std::any_of(elements_.begin(), elements_.end(),
                       [](const Element& e) { return e.kind == ElementKind::Resistor; });
}

bool CircuitNetwork::has_reactive() const {
    return std::any_of(elements_.begin(), elements_.end(),
                       [](const Element& e) { return e.kind != ElementKind::Resistor; });
}

std::vector<double> CircuitNetwork::time_constants(double probed_C) const {
    std::vector<double> rs, cs, ls;
    for (const auto& e : elements_) {
        if (e.kind == ElementKind::Resistor) rs.push_back(e.value);
        if (e.kind == ElementKind::Capacitor) cs.push_back(e.value);
        if (e.kind == ElementKind::Inductor) ls.push_back(e.value);
    }
    if (probed_C > 0.0) cs.push_back(probed_C);
    std::vector<double> tau;
    for (double r : rs)
        for (double c : cs) tau.push_back(r * c);
    for (double r : rs)
        for (double l : ls) tau.push_back(l / r);
    for (double l : ls)
        for (double c : cs) tau.push_back(std::sqrt(l * c));
    return tau;
}

std::complex<double> evaluate_impedance(const CircuitNetwork& net, double omega) {
    if (omega == 0.0) throw Error("evaluate_impedance: omega must be nonzero");
    auto idx = index_nodes(net.elements(), net.port_a(), net.port_b());
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<int>(idx.size()));
    rhs(idx.at(net.port_a())) = Cplx(1.0, 0.0);
    rhs(idx.at(net.port_b())) = Cplx(-1.0, 0.0);
    Eigen::VectorXcd v = solve_nodal(net, omega, idx, rhs);
    return v(idx.at(net.port_a())) - v(idx.at(net.port_b()));
}

std::vector<std::complex<double>> noise_transfer_impedances(const CircuitNetwork& net,
                                                            double omega) {
    auto idx = index_nodes(net.elements(), net.port_a(), net.port_b());
    std::vector<Cplx> out;
    for (const auto& e : net.elements()) {
        if (e.kind != ElementKind::Resistor) continue;
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<int>(idx.size()));
        rhs(idx.at(e.node_a)) = Cplx(1.0, 0.0);
        rhs(idx.at(e.node_b)) = Cplx(-1.0, 0.0);
        Eigen::VectorXcd v = solve_nodal(net, omega, idx, rhs);
        out.push_back(v(idx.at(net.port_a())) - v(idx.at(net.port_b())));
    }
    return out;
}

ReferenceCircuit reference_network(const CircuitNetwork& net) {
    // Union-find over node names; capacitors merge their endpoints.
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        return it->second = find(it->second);
    };
    auto unite = [&](const std::string& a, const std::string& b) {
        parent[find(a)] = find(b);
    };
    for (const auto& e : net.elements())
        if (e.kind == ElementKind::Capacitor) unite(e.node_a, e.node_b);

    const std::string pa = find(net.port_a()), pb = find(net.port_b());
    if (pa == pb)
        return {ReferenceKind::ShortedPort,
                CircuitNetwork({{ElementKind::Resistor, "Rdummy", "a", "gnd", 1.0}}, "a", "gnd")};

    // Keep resistors only, with merged node names; drop self-loops.
    std::vector<Element> kept;
    for (const auto& e : net.elements()) {
        if (e.kind != ElementKind::Resistor) continue;
        Element r = e;
        r.node_a = find(e.node_a);
        r.node_b = find(e.node_b);
        if (r.node_a == r.node_b) continue;
        kept.push_back(r);
    }
    // Restrict to the component that still bridges the port.
    auto comp = component_of(kept, pa);
    if (!comp.count(pb))
        return {ReferenceKind::OpenCircuit,
                CircuitNetwork({{ElementKind::Resistor, "Rdummy", "a", "gnd", 1.0}}, "a", "gnd")};
    std::erase_if(kept, [&](const Element& e) { return !comp.count(e.node_a); });

    // Prune dangling branches: repeatedly drop elements whose endpoint has
    // degree 1 and is not a port node.
    bool pruned = true;
    while (pruned) {
        pruned = false;
        std::map<std::string, int> deg;
        for (const auto& e : kept) {
            deg[e.node_a]++;
            deg[e.node_b]++;
        }
        std::erase_if(kept, [&](const Element& e) {
            for (const auto& n : {e.node_a, e.node_b})
                if (deg[n] == 1 && n != pa && n != pb) {
                    pruned = true;
                    return true;
                }
            return false;
        });
    }
    return {ReferenceKind::Network, CircuitNetwork(kept, pa, pb)};
}

double noise_spectrum(double R, double omega, double T) {
    if (!(R > 0.0)) throw Error("noise_spectrum: R must be positive");
    const double h = constants::hbar;
    if (T <= 0.0) return omega > 0.0 ? 2.0 * h * omega / R : 0.0;
    if (omega == 0.0) return 2.0 * T / R;  // classical (Johnson-Nyquist) limit
    const double x = h * omega / T;
    if (std::abs(x) < 1e-8)  // series expansion of the Bose factor
        return (2.0 * T / R) * (1.0 + x / 2.0);
    return (2.0 * h * omega / R) / (1.0 - std::exp(-x));
}

PortImpedance PortImpedance::from_network(const CircuitNetwork& net, double probed_C) {
    PortImpedance z;
    // Copy the network by value so the evaluator is self-contained.
    z.eval = [net](double omega) { return evaluate_impedance(net, omega); };
    z.time_constants = net.time_constants(probed_C);
    z.provenance = Provenance::Network;
    return z;
}

} // namespace zpf
