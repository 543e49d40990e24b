#pragma once

#include <stdexcept>
#include <string>

namespace zpf {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Network is malformed (disconnected port, bad element, ...).
class TopologyError : public Error {
public:
    using Error::Error;
};

/// The nodal admittance matrix is singular at the requested frequency
/// (lossless sub-network resonance). Callers may perturb omega.
class IsolatedPoleError : public Error {
public:
    using Error::Error;
};

/// The requested integral does not converge as stated (e.g. raw
/// zero-point energy of a circuit that requires renormalization).
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its panel budget without reaching the
/// requested tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

} // namespace zpf
