#pragma once

#include "zpf/circuit.hpp"

namespace zpf::builtin {

/// Canonical two-terminal circuits, ports at (a, gnd):
///   I:   R in series with C0.
///   II:  R in series with L.
///   III: R in parallel with L.
///   IV:  (R in series with C0) in parallel with L.
///   parallel-RC: R in parallel with C (qubit coupling example).
CircuitNetwork circuit_I(double R, double C0);
CircuitNetwork circuit_II(double R, double L);
CircuitNetwork circuit_III(double R, double L);
CircuitNetwork circuit_IV(double R, double L, double C0);
CircuitNetwork parallel_RC(double R, double C);

/// Builds a named circuit (id in {"I","II","III","IV","parallel-RC"}) from
/// whichever of R/L/C0/C it needs; throws Error for an unknown id or a
/// missing parameter (signalled by a non-positive value).
CircuitNetwork by_id(const std::string& id, double R, double L, double C0, double C);

} // namespace zpf::builtin
