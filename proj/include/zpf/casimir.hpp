#pragma once

#include "zpf/quadrature.hpp"

namespace zpf {

struct PlasmaPlate {
    double plasma_wavelength = 100e-9;  // meters (aluminum-like default)
    double area = 0.0;                  // m^2
    double separation = 0.0;            // m
};

/// Ideal-mirror Casimir force magnitude between parallel plates:
/// pi^2 hbar c A / (240 y^4). The force is attractive.
double casimir_ideal(double area, double y);

/// Zero-temperature Lifshitz force magnitude for plasma-model plates,
/// eps(i zeta) = 1 + (omega_p/zeta)^2, summing TE and TM reflection
/// channels over imaginary frequencies. Reduces to casimir_ideal as
/// plasma_wavelength / separation -> 0.
double casimir_plasma(const PlasmaPlate& plate, const QuadratureConfig& quad = {});

} // namespace zpf
