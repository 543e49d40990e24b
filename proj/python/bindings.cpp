// Python bindings for the zpfcirc library.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zpf/builtin.hpp"
#include "zpf/casimir.hpp"
#include "zpf/circuit.hpp"
#include "zpf/constants.hpp"
#include "zpf/errors.hpp"
#include "zpf/forces.hpp"
#include "zpf/metrology.hpp"
#include "zpf/netlist.hpp"
#include "zpf/qubit.hpp"
#include "zpf/zeropoint.hpp"

namespace py = pybind11;
using namespace zpf;

namespace {

CircuitNetwork parse_or_throw(const std::string& text) {
    auto res = netlist::parse(text);
    if (!res.ok()) {
        std::string msg = "netlist has errors:";
        for (const auto& d : res.diagnostics)
            msg += "\n  line " + std::to_string(d.line) + ", col " +
                   std::to_string(d.col) + ": " + d.message +
                   (d.token.empty() ? "" : " ('" + d.token + "')");
        throw py::value_error(msg);
    }
    return *res.network;
}

ForceMethod method_from(const std::string& name) {
    if (name == "analytic") return ForceMethod::Analytic;
    if (name == "fd") return ForceMethod::FiniteDifference;
    throw py::value_error("method must be 'analytic' or 'fd'");
}

} // namespace

PYBIND11_MODULE(_zpfcirc, m) {
    m.doc() =
        "Zero-point fluctuation potentials, forces, and transmon level shifts "
        "for linear lumped RLC circuits";

    // Exceptions: translators run newest-first, so register the base class
    // first and the derived classes after it.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<TopologyError>(m, "TopologyError", PyExc_ValueError);
    py::register_exception<IsolatedPoleError>(m, "IsolatedPoleError", PyExc_ArithmeticError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);

    m.attr("hbar") = constants::hbar;
    m.attr("eps0") = constants::eps0;
    m.attr("c_light") = constants::c_light;

    // --- circuits ---
    py::enum_<ElementKind>(m, "ElementKind")
        .value("Resistor", ElementKind::Resistor)
        .value("Capacitor", ElementKind::Capacitor)
        .value("Inductor", ElementKind::Inductor);

    py::class_<Element>(m, "Element")
        .def(py::init([](ElementKind k, const std::string& name,
                         const std::string& a, const std::string& b, double v) {
                 return Element{k, name, a, b, v};
             }),
             py::arg("kind"), py::arg("name"), py::arg("node_a"),
             py::arg("node_b"), py::arg("value"))
        .def_readonly("kind", &Element::kind)
        .def_readonly("name", &Element::name)
        .def_readonly("node_a", &Element::node_a)
        .def_readonly("node_b", &Element::node_b)
        .def_readonly("value", &Element::value);

    py::class_<CircuitNetwork>(m, "CircuitNetwork")
        .def(py::init<std::vector<Element>, std::string, std::string>(),
             py::arg("elements"), py::arg("port_a"), py::arg("port_b"))
        .def_property_readonly("elements", &CircuitNetwork::elements)
        .def_property_readonly("nodes", &CircuitNetwork::nodes)
        .def_property_readonly("port_a", &CircuitNetwork::port_a)
        .def_property_readonly("port_b", &CircuitNetwork::port_b)
        .def("has_resistor", &CircuitNetwork::has_resistor)
        .def("__repr__", [](const CircuitNetwork& n) {
            return "<CircuitNetwork with " + std::to_string(n.elements().size()) +
                   " elements>";
        });

    m.def("parse_netlist", &parse_or_throw, py::arg("text"),
          "Parse a netlist string into a CircuitNetwork; raises ValueError "
          "with all diagnostics on a bad file.");
    m.def(
        "lint_netlist",
        [](const std::string& text) {
            auto res = netlist::parse(text);
            std::vector<std::tuple<int, int, std::string, std::string>> out;
            for (const auto& d : res.diagnostics)
                out.emplace_back(d.line, d.col, d.token, d.message);
            return out;
        },
        py::arg("text"),
        "All parse diagnostics as (line, col, token, message) tuples.");
    m.def("unparse_netlist", &netlist::unparse, py::arg("network"),
          "Canonical netlist text for a network.");

    m.def("circuit_I", &builtin::circuit_I, py::arg("R"), py::arg("C0"));
    m.def("circuit_II", &builtin::circuit_II, py::arg("R"), py::arg("L"));
    m.def("circuit_III", &builtin::circuit_III, py::arg("R"), py::arg("L"));
    m.def("circuit_IV", &builtin::circuit_IV, py::arg("R"), py::arg("L"), py::arg("C0"));
    m.def("parallel_RC", &builtin::parallel_RC, py::arg("R"), py::arg("C"));

    m.def("evaluate_impedance", &evaluate_impedance, py::arg("network"),
          py::arg("omega"),
          "Port impedance Z(omega) (engineering convention, Z = R + iX).");

    // --- quadrature / validity configuration ---
    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
        .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
        .def_readwrite("max_panels", &QuadratureConfig::max_panels);

    py::class_<ValidityParams>(m, "ValidityParams")
        .def(py::init<>())
        .def_readwrite("element_size_l", &ValidityParams::element_size_l)
        .def("omega_max", &ValidityParams::omega_max);

    // --- zero-point energies ---
    py::class_<ZeroPointResult>(m, "ZeroPointResult")
        .def_readonly("energy", &ZeroPointResult::energy)
        .def_readonly("renormalized", &ZeroPointResult::renormalized)
        .def_readonly("reference_energy_defined",
                      &ZeroPointResult::reference_energy_defined)
        .def_readonly("abs_error_estimate", &ZeroPointResult::abs_error_estimate)
        .def_readonly("tail_fraction_beyond_cutoff",
                      &ZeroPointResult::tail_fraction_beyond_cutoff)
        .def_readonly("validity_ok", &ZeroPointResult::validity_ok)
        .def("__repr__", [](const ZeroPointResult& r) {
            return "<ZeroPointResult energy=" + std::to_string(r.energy) + " J>";
        });

    m.def(
        "energy_raw",
        [](const CircuitNetwork& net, double C, const QuadratureConfig& quad,
           const ValidityParams& vp) {
            return energy_raw(PortImpedance::from_network(net), C, quad, vp);
        },
        py::arg("network"), py::arg("C"), py::arg("quad") = QuadratureConfig{},
        py::arg("validity") = ValidityParams{},
        "Unrenormalized energy integral; raises DivergenceError when the "
        "integrand tail decays too slowly.");
    m.def("energy_renormalized", &energy_renormalized, py::arg("network"),
          py::arg("C"), py::arg("quad") = QuadratureConfig{},
          py::arg("validity") = ValidityParams{},
          "Reference-subtracted energy (single difference integrand).");

    m.def("closed_form_I", &closed_form_I, py::arg("R"), py::arg("C0"), py::arg("C"));
    m.def("closed_form_II", &closed_form_II, py::arg("R"), py::arg("L"), py::arg("C"));
    m.def("closed_form_III", &closed_form_III, py::arg("R"), py::arg("L"), py::arg("C"));
    m.def("closed_form_IV", &closed_form_IV, py::arg("R"), py::arg("L"),
          py::arg("C0"), py::arg("C"), py::arg("quad") = QuadratureConfig{});

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("validity_ok", &ValidityReport::validity_ok)
        .def_readonly("tail_fraction", &ValidityReport::tail_fraction);
    m.def("check_validity", &check_validity, py::arg("network"), py::arg("C"),
          py::arg("validity") = ValidityParams{},
          py::arg("quad") = QuadratureConfig{},
          "Fraction of the energy integral beyond omega_max = c/l.");

    // --- forces ---
    py::class_<CapacitorGeometry>(m, "CapacitorGeometry")
        .def_static("parallel_plate", &CapacitorGeometry::parallel_plate,
                    py::arg("area"))
        .def_static("from_diameter", &CapacitorGeometry::from_diameter,
                    py::arg("diameter"))
        .def_static("user", &CapacitorGeometry::user, py::arg("C_of_xi"),
                    py::arg("dC_dxi"))
        .def("C_of_xi", [](const CapacitorGeometry& g, double xi) { return g.C_of_xi(xi); })
        .def("dC_dxi", [](const CapacitorGeometry& g, double xi) { return g.dC_dxi(xi); });

    py::class_<EnergyModel>(m, "EnergyModel")
        .def_static("from_network", &EnergyModel::from_network, py::arg("network"),
                    py::arg("quad") = QuadratureConfig{})
        .def_static("closed_I", &EnergyModel::closed_I, py::arg("R"), py::arg("C0"))
        .def_static("closed_II", &EnergyModel::closed_II, py::arg("R"), py::arg("L"))
        .def_static("closed_III", &EnergyModel::closed_III, py::arg("R"), py::arg("L"))
        .def_static("closed_IV", &EnergyModel::closed_IV, py::arg("R"), py::arg("L"),
                    py::arg("C0"), py::arg("quad") = QuadratureConfig{})
        .def("U_of_C", [](const EnergyModel& mdl, double C) { return mdl.U_of_C(C); });

    m.def(
        "force",
        [](const EnergyModel& model, const CapacitorGeometry& geom, double xi,
           const std::string& method) {
            return force(model, geom, xi, method_from(method));
        },
        py::arg("model"), py::arg("geometry"), py::arg("xi"),
        py::arg("method") = "analytic",
        "Generalized force f = -(dU/dC)(dC/dxi) at coordinate xi.");

    // --- Casimir comparison ---
    m.def("casimir_ideal", &casimir_ideal, py::arg("area"), py::arg("y"),
          "Ideal-mirror Casimir force magnitude (attractive).");
    m.def(
        "casimir_plasma",
        [](double area, double y, double plasma_wavelength,
           const QuadratureConfig& quad) {
            return casimir_plasma({plasma_wavelength, area, y}, quad);
        },
        py::arg("area"), py::arg("y"), py::arg("plasma_wavelength") = 100e-9,
        py::arg("quad") = QuadratureConfig{},
        "Zero-temperature Lifshitz force magnitude for plasma-model plates.");

    // --- transmon level shifts ---
    py::class_<TransmonParams>(m, "TransmonParams")
        .def(py::init([](double E_C, double E_J, double C_g, double C_J) {
                 return TransmonParams{E_C, E_J, C_g, C_J};
             }),
             py::arg("E_C"), py::arg("E_J"), py::arg("C_g"), py::arg("C_J"))
        .def_readwrite("E_C", &TransmonParams::E_C)
        .def_readwrite("E_J", &TransmonParams::E_J)
        .def_readwrite("C_g", &TransmonParams::C_g)
        .def_readwrite("C_J", &TransmonParams::C_J)
        .def("beta", &TransmonParams::beta)
        .def("omega0", &TransmonParams::omega0)
        .def("omega10", &TransmonParams::omega10)
        .def("omega21", &TransmonParams::omega21)
        .def("Z_J", &TransmonParams::Z_J)
        .def("warnings", &TransmonParams::warnings);

    py::class_<LevelShift>(m, "LevelShift")
        .def_readonly("delta", &LevelShift::delta)
        .def_readonly("gamma", &LevelShift::gamma)
        .def("__repr__", [](const LevelShift& s) {
            return "<LevelShift delta=" + std::to_string(s.delta) +
                   " gamma=" + std::to_string(s.gamma) + " rad/s>";
        });

    m.def(
        "level_shift",
        [](const TransmonParams& tp, const CircuitNetwork& net,
           const QuadratureConfig& quad) {
            return level_shift(tp, node_spectrum(net), quad);
        },
        py::arg("transmon"), py::arg("network"),
        py::arg("quad") = QuadratureConfig{},
        "Transition shift delta and linewidth gamma (rad/s) for a transmon "
        "coupled to the network's port.");
    m.def(
        "effective_correction",
        [](const TransmonParams& tp, const CircuitNetwork& net, int n, int mm,
           const QuadratureConfig& quad) {
            return effective_correction(tp, node_spectrum(net), n, mm, quad);
        },
        py::arg("transmon"), py::arg("network"), py::arg("n"), py::arg("m"),
        py::arg("quad") = QuadratureConfig{},
        "Second-order non-Hermitian correction E^(2)_nm in joules.");
    m.def(
        "node_spectrum_at",
        [](const CircuitNetwork& net, double omega) {
            return node_spectrum(net)(omega);
        },
        py::arg("network"), py::arg("omega"),
        "One-sided T=0 voltage noise spectrum at the port, V^2 s.");

    // --- metrology ---
    py::class_<MechanicalMode>(m, "MechanicalMode")
        .def(py::init([](double mass, double Omega, double Q) {
                 return MechanicalMode{mass, Omega, Q};
             }),
             py::arg("mass"), py::arg("Omega"), py::arg("Q"))
        .def_readwrite("mass", &MechanicalMode::mass)
        .def_readwrite("Omega", &MechanicalMode::Omega)
        .def_readwrite("Q", &MechanicalMode::Q)
        .def("Gamma", &MechanicalMode::Gamma);

    py::class_<MeasurementConfig>(m, "MeasurementConfig")
        .def(py::init<>())
        .def_readwrite("noise_floor_S_N", &MeasurementConfig::noise_floor_S_N)
        .def_readwrite("bandwidth_B", &MeasurementConfig::bandwidth_B)
        .def_readwrite("modulation_eta", &MeasurementConfig::modulation_eta);

    py::class_<SnrReport>(m, "SnrReport")
        .def_readonly("force_N", &SnrReport::force_N)
        .def_readonly("eta", &SnrReport::eta)
        .def_readonly("x_dc", &SnrReport::x_dc)
        .def_readonly("x_s", &SnrReport::x_s)
        .def_readonly("x_N", &SnrReport::x_N)
        .def_readonly("snr", &SnrReport::snr);

    m.def("snr_report", &snr_report, py::arg("force_N"), py::arg("dforce_dparam"),
          py::arg("param"), py::arg("relative_modulation_u"), py::arg("mode"),
          py::arg("config"), py::arg("hz_convention") = false,
          "Dynamic-method measurement chain: x_dc, x_s, x_N and SNR.");
}
