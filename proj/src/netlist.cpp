#include "zpf/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace zpf::netlist {

namespace {

struct Token {
    std::string text;
    int col = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return toks;
}

std::optional<double> suffix_scale(char c) {
    switch (c) {
        case 'p': return 1e-12;
        case 'n': return 1e-9;
        case 'u': return 1e-6;
        case 'm': return 1e-3;
        case 'k': return 1e3;
        case 'M': return 1e6;
        case 'G': return 1e9;
        default: return std::nullopt;
    }
}

/// Parses "<decimal>[suffix]". Returns nullopt with `why` set on failure.
std::optional<double> parse_value(const std::string& s, std::string& why) {
    if (s.empty()) {
        why = "empty value";
        return std::nullopt;
    }
    std::string num = s;
    double scale = 1.0;
    const char last = s.back();
    if (!std::isdigit(static_cast<unsigned char>(last)) && last != '.') {
        auto sc = suffix_scale(last);
        if (!sc) {
            why = std::string("unknown SI suffix '") + last + "'";
            return std::nullopt;
        }
        scale = *sc;
        num = s.substr(0, s.size() - 1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
        why = "malformed number";
        return std::nullopt;
    }
    if (!(v > 0.0) || !std::isfinite(v)) {
        why = "value must be positive";
        return std::nullopt;
    }
    return v * scale;
}

} // namespace

ParseResult parse(const std::string& text) {
    ParseResult out;
    std::vector<Element> elems;
    std::set<std::string> names;
    std::optional<std::pair<std::string, std::string>> port;

    auto diag = [&](int line, int col, std::string tok, std::string msg) {
        out.diagnostics.push_back({line, col, std::move(tok), std::move(msg)});
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;

        if (head == "PORT") {
            if (toks.size() != 3) {
                diag(lineno, toks[0].col, head, "PORT requires exactly two node names");
                continue;
            }
            if (toks[1].text == toks[2].text) {
                diag(lineno, toks[2].col, toks[2].text, "port nodes are identical");
                continue;
            }
            if (port) {
                diag(lineno, toks[0].col, head, "duplicate PORT directive");
                continue;
            }
            port = {toks[1].text, toks[2].text};
            continue;
        }
        if (head == "PARAM") {
            if (toks.size() != 3)
                diag(lineno, toks[0].col, head, "PARAM requires a key and a value");
            continue;  // recorded-but-unused; tolerated for forward compatibility
        }

        const char k = head.empty() ? '\0' : head[0];
        ElementKind kind;
        if (k == 'R') kind = ElementKind::Resistor;
        else if (k == 'C') kind = ElementKind::Capacitor;
        else if (k == 'L') kind = ElementKind::Inductor;
        else {
            diag(lineno, toks[0].col, head, "unknown directive (expected R*/C*/L*/PORT/PARAM)");
            continue;
        }
        if (toks.size() != 4) {
            diag(lineno, toks[0].col, head, "element requires: name nodeA nodeB value");
            continue;
        }
        if (!names.insert(head).second) {
            diag(lineno, toks[0].col, head, "duplicate element name");
            continue;
        }
        if (toks[1].text == toks[2].text) {
            diag(lineno, toks[2].col, toks[2].text, "element connects a node to itself");
            continue;
        }
        std::string why;
        auto v = parse_value(toks[3].text, why);
        if (!v) {
            diag(lineno, toks[3].col, toks[3].text, why);
            continue;
        }
        elems.push_back({kind, head, toks[1].text, toks[2].text, *v});
    }

    if (!port) diag(lineno + 1, 0, "", "missing PORT directive");
    if (!out.diagnostics.empty()) return out;

    try {
        out.network.emplace(std::move(elems), port->first, port->second);
    } catch (const Error& e) {
        diag(0, 0, "", e.what());
    }
    return out;
}

std::string format_value(double v) {
    static const std::pair<double, char> scales[] = {
        {1e9, 'G'}, {1e6, 'M'}, {1e3, 'k'},
        {1e-3, 'm'}, {1e-6, 'u'}, {1e-9, 'n'}, {1e-12, 'p'}};
    auto plain = [](double x) {
        // Shortest representation that round-trips exactly.
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, ptr);
    };
    if (v >= 1.0 && v < 1e3) return plain(v);
    for (auto [s, c] : scales) {
        double scaled = v / s;
        // Use the suffix only when re-scaling is bit-exact, so that
        // parse(unparse(...)) reproduces the value exactly.
        if (scaled >= 1.0 && scaled < 1e3 && scaled * s == v)
            return plain(scaled) + c;
    }
    return plain(v);
}

std::string unparse(const CircuitNetwork& net) {
    std::vector<Element> elems = net.elements();
    std::sort(elems.begin(), elems.end(),
              [](const Element& a, const Element& b) { return a.name < b.name; });
    std::ostringstream ss;
    for (const auto& e : elems)
        ss << e.name << ' ' << e.node_a << ' ' << e.node_b << ' '
           << format_value(e.value) << '\n';
    ss << "PORT " << net.port_a() << ' ' << net.port_b() << '\n';
    return ss.str();
}

} // namespace zpf::netlist
