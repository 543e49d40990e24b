#include "zpf/builtin.hpp"

namespace zpf::builtin {

namespace {
constexpr ElementKind R_ = ElementKind::Resistor;
constexpr ElementKind C_ = ElementKind::Capacitor;
constexpr ElementKind L_ = ElementKind::Inductor;

void need(double v, const char* name, const char* id) {
    if (!(v > 0.0))
        throw Error(std::string("circuit ") + id + " requires parameter " + name);
}
} // namespace

CircuitNetwork circuit_I(double R, double C0) {
    need(R, "R", "I");
    need(C0, "C0", "I");
    return CircuitNetwork({{R_, "R1", "a", "b", R}, {C_, "C0", "b", "gnd", C0}},
                          "a", "gnd");
}

CircuitNetwork circuit_II(double R, double L) {
    need(R, "R", "II");
    need(L, "L", "II");
    return CircuitNetwork({{R_, "R1", "a", "b", R}, {L_, "L1", "b", "gnd", L}},
                          "a", "gnd");
}

CircuitNetwork circuit_III(double R, double L) {
    need(R, "R", "III");
    need(L, "L", "III");
    return CircuitNetwork({{R_, "R1", "a", "gnd", R}, {L_, "L1", "a", "gnd", L}},
                          "a", "gnd");
}

CircuitNetwork circuit_IV(double R, double L, double C0) {
    need(R, "R", "IV");
    need(L, "L", "IV");
    need(C0, "C0", "IV");
    return CircuitNetwork({{R_, "R1", "a", "b", R},
                           {C_, "C0", "b", "gnd", C0},
                           {L_, "L1", "a", "gnd", L}},
                          "a", "gnd");
}

CircuitNetwork parallel_RC(double R, double C) {
    need(R, "R", "parallel-RC");
    need(C, "C", "parallel-RC");
    return CircuitNetwork({{R_, "R1", "a", "gnd", R}, {C_, "C1", "a", "gnd", C}},
                          "a", "gnd");
}

CircuitNetwork by_id(const std::string& id, double R, double L, double C0, double C) {
    if (id == "I") return circuit_I(R, C0);
    if (id == "II") return circuit_II(R, L);
    if (id == "III") return circuit_III(R, L);
    if (id == "IV") return circuit_IV(R, L, C0);
    if (id == "parallel-RC") return parallel_RC(R, C);
    throw Error("unknown built-in circuit id: " + id);
}

} // namespace zpf::builtin
