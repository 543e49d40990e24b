#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zpf/circuit.hpp"

namespace zpf::netlist {

/// One parse problem. `line` is 1-based; `col` points at the offending
/// token's first character (1-based, 0 when the whole line is at fault).
struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string token;
    std::string message;
};

struct ParseResult {
    std::optional<CircuitNetwork> network;  // set only when diagnostics empty
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return network.has_value(); }
};

/// Parses the minimal netlist dialect:
///   R<name> nodeA nodeB value     (likewise C..., L...)
///   PORT nodeA nodeB              (exactly once)
///   PARAM key value               (recorded, currently unused)
///   # comment
/// Values are positive decimals with optional SI suffix p/n/u/m/k/M/G.
/// Node names are case-sensitive; `gnd` is the reserved ground node.
/// Parsing is total: all diagnostics for a bad file are collected.
ParseResult parse(const std::string& text);

/// Canonical text form: elements sorted alphabetically by name, then the
/// PORT line. parse(unparse(net)) is graph-isomorphic to net.
std::string unparse(const CircuitNetwork& net);

/// Formats a value with SI suffix when an exact one applies, else plain.
std::string format_value(double v);

} // namespace zpf::netlist
