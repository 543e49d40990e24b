// zpf: command-line front end for zero-point fluctuation potentials, forces,
// level shifts, and metrology estimates of linear lumped RLC circuits.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

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

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Output rows: named cells, CSV with fixed 12-significant-digit floats (so
// identical inputs give byte-identical files), JSON mirroring rows as an
// array of objects.

struct Cell {
    enum Kind { Num, Flag, Str } kind = Num;
    double num = 0.0;
    bool flag = false;
    std::string str;

    static Cell number(double v) { return {Num, v, false, {}}; }
    static Cell boolean(bool v) { return {Flag, 0.0, v, {}}; }
    static Cell text(std::string s) { return {Str, 0.0, false, std::move(s)}; }
};

using Row = std::vector<std::pair<std::string, Cell>>;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

std::string to_csv(const std::vector<Row>& rows) {
    std::ostringstream out;
    if (rows.empty()) return out.str();
    for (size_t i = 0; i < rows.front().size(); ++i)
        out << (i ? "," : "") << rows.front()[i].first;
    out << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i].second;
            out << (i ? "," : "");
            switch (c.kind) {
                case Cell::Num: out << fmt12(c.num); break;
                case Cell::Flag: out << (c.flag ? "1" : "0"); break;
                case Cell::Str: out << c.str; break;
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json(const std::vector<Row>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json obj;
        for (const auto& [name, c] : row) {
            switch (c.kind) {
                case Cell::Num: obj[name] = c.num; break;
                case Cell::Flag: obj[name] = c.flag; break;
                case Cell::Str: obj[name] = c.str; break;
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

void write_output(const std::vector<Row>& rows, const std::string& format,
                  const std::string& path) {
    const std::string text = format == "json" ? to_json(rows) : to_csv(rows);
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw zpf::Error("cannot open output file: " + path);
    f << text;
}

std::vector<double> make_grid(double from, double to, int points, bool log_spacing) {
    if (points < 1) throw zpf::Error("points must be >= 1");
    if (from <= 0.0 && log_spacing)
        throw zpf::Error("log spacing requires positive bounds");
    std::vector<double> g;
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : double(i) / (points - 1);
        g.push_back(log_spacing ? from * std::pow(to / from, t)
                                : from + (to - from) * t);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Shared option groups.

struct CircuitOpts {
    std::string circuit;        // built-in id
    std::string netlist_path;   // "-" = stdin
    double R = 0.0, L = 0.0, C0 = 0.0, C = 0.0;

    void attach(CLI::App* cmd, bool with_probe_C = true) {
        auto* g = cmd->add_option_group("circuit", "environment circuit");
        g->add_option("--circuit", circuit,
                      "built-in circuit id: I, II, III, IV, parallel-RC");
        g->add_option("--netlist", netlist_path,
                      "netlist file path ('-' for stdin)");
        cmd->add_option("--R", R, "resistance, ohm (built-in circuits)");
        cmd->add_option("--L", L, "inductance, henry (built-in circuits)");
        cmd->add_option("--C0", C0, "fixed capacitance, farad (built-in circuits)");
        if (with_probe_C)
            cmd->add_option("--C", C, "probe capacitance, farad");
    }

    bool is_builtin() const { return !circuit.empty(); }

    zpf::CircuitNetwork network() const {
        if (!circuit.empty() && !netlist_path.empty())
            throw zpf::Error("--circuit and --netlist are mutually exclusive");
        if (!circuit.empty()) return zpf::builtin::by_id(circuit, R, L, C0, C);
        if (netlist_path.empty())
            throw zpf::Error("no circuit given: use --circuit or --netlist");
        std::string text;
        if (netlist_path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream f(netlist_path);
            if (!f) throw zpf::Error("cannot open netlist: " + netlist_path);
            std::ostringstream buf;
            buf << f.rdbuf();
            text = buf.str();
        }
        auto res = zpf::netlist::parse(text);
        if (!res.ok()) {
            for (const auto& d : res.diagnostics)
                std::cerr << netlist_path << ":" << d.line << ":" << d.col
                          << ": " << d.message
                          << (d.token.empty() ? "" : " ('" + d.token + "')")
                          << "\n";
            throw zpf::Error("netlist has errors");
        }
        return *res.network;
    }
};

struct GeometryOpts {
    double diameter = 0.0, area = 0.0, y = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--diameter", diameter, "plate diameter, m");
        cmd->add_option("--area", area, "plate area, m^2 (excludes --diameter)");
        cmd->add_option("--y", y, "plate separation, m");
    }

    bool given() const { return diameter > 0.0 || area > 0.0; }

    double plate_area() const {
        if (diameter > 0.0 && area > 0.0)
            throw zpf::Error("--diameter and --area are mutually exclusive");
        if (diameter > 0.0) return zpf::constants::pi * diameter * diameter / 4.0;
        if (area > 0.0) return area;
        throw zpf::Error("geometry required: give --diameter or --area");
    }

    zpf::CapacitorGeometry geometry() const {
        return zpf::CapacitorGeometry::parallel_plate(plate_area());
    }

    double capacitance() const {
        if (y <= 0.0) throw zpf::Error("--y (separation) must be positive");
        return plate_area() * zpf::constants::eps0 / y;
    }
};

struct QuadOpts {
    zpf::QuadratureConfig quad;
    zpf::ValidityParams vp;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rel-tol", quad.rel_tol, "quadrature relative tolerance");
        cmd->add_option("--abs-tol", quad.abs_tol, "quadrature absolute tolerance");
        cmd->add_option("--max-panels", quad.max_panels, "quadrature panel budget");
        cmd->add_option("--element-size", vp.element_size_l,
                        "circuit element size l for the validity cutoff c/l, m");
    }
};

struct OutputOpts {
    std::string format = "csv";
    std::string path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", path, "output file (default stdout)");
    }
};

// Closed-form energy model for a built-in circuit id, plus the matching
// network for validity checks. parallel-RC has no closed form; it falls back
// to network quadrature.
zpf::EnergyModel builtin_model(const std::string& id, double R, double L,
                               double C0, const zpf::QuadratureConfig& quad) {
    if (id == "I") return zpf::EnergyModel::closed_I(R, C0);
    if (id == "II") return zpf::EnergyModel::closed_II(R, L);
    if (id == "III") return zpf::EnergyModel::closed_III(R, L);
    if (id == "IV") return zpf::EnergyModel::closed_IV(R, L, C0, quad);
    throw zpf::Error("no closed-form model for circuit id '" + id + "'");
}

bool builtin_renormalized(const std::string& id) {
    // Circuit II converges without reference subtraction; the others are
    // reference-subtracted energies.
    return id != "II";
}

int failures_to_exit(size_t failed, size_t total) {
    if (total > 0 && failed == total) return 2;  // all points failed
    return 0;
}

// ---------------------------------------------------------------------------
// Subcommands.

int run_energy(const CircuitOpts& co, const GeometryOpts& go, const QuadOpts& qo,
               const OutputOpts& oo, bool renormalize) {
    auto net = co.network();
    double C = co.C;
    if (C <= 0.0 && go.given()) C = go.capacitance();
    if (C <= 0.0)
        throw zpf::Error("probe capacitance required: --C or --diameter/--area with --y");

    zpf::ZeroPointResult res;
    if (renormalize) {
        res = zpf::energy_renormalized(net, C, qo.quad, qo.vp);
    } else {
        try {
            res = zpf::energy_raw(zpf::PortImpedance::from_network(net), C,
                                  qo.quad, qo.vp);
        } catch (const zpf::DivergenceError& e) {
            std::cerr << "error: " << e.what()
                      << "; the raw integral diverges and requires renormalization"
                         " (rerun with --renormalize)\n";
            return 2;
        }
    }

    Row row{{"C_F", Cell::number(C)},
            {"energy_J", Cell::number(res.energy)},
            {"abs_error_J", Cell::number(res.abs_error_estimate)},
            {"tail_fraction", Cell::number(res.tail_fraction_beyond_cutoff)},
            {"reference_defined", Cell::boolean(res.reference_energy_defined)},
            {"validity_ok", Cell::boolean(res.validity_ok)},
            {"renormalized", Cell::boolean(res.renormalized)}};
    write_output({row}, oo.format, oo.path);
    return 0;
}

int run_force(const CircuitOpts& co, const GeometryOpts& go, const QuadOpts& qo,
              const OutputOpts& oo, const std::string& method_name) {
    if (go.y <= 0.0) throw zpf::Error("--y (separation) must be positive");
    const auto geom = go.geometry();
    const double C = go.capacitance();
    const auto method = method_name == "fd" ? zpf::ForceMethod::FiniteDifference
                                            : zpf::ForceMethod::Analytic;

    zpf::EnergyModel model;
    bool renorm = true;
    zpf::CircuitNetwork net = [&] {
        if (co.is_builtin() && co.circuit != "parallel-RC") {
            CircuitOpts with_probe = co;
            with_probe.C = C;
            auto n = with_probe.network();
            model = builtin_model(co.circuit, co.R, co.L, co.C0, qo.quad);
            renorm = builtin_renormalized(co.circuit);
            return n;
        }
        auto n = co.network();
        model = zpf::EnergyModel::from_network(n, qo.quad);
        return n;
    }();

    const double f = zpf::force(model, geom, go.y, method);
    const auto validity = zpf::check_validity(net, C, qo.vp, qo.quad);

    Row row{{"y_m", Cell::number(go.y)},
            {"force_N", Cell::number(f)},
            {"valid", Cell::boolean(true)},
            {"validity_ok", Cell::boolean(validity.validity_ok)},
            {"renormalized", Cell::boolean(renorm)}};
    write_output({row}, oo.format, oo.path);
    return 0;
}

int run_sweep(const CircuitOpts& co, const GeometryOpts& go, const QuadOpts& qo,
              const OutputOpts& oo, const std::string& quantity,
              const std::string& param, double from, double to, int points,
              bool linear, const zpf::TransmonParams& tp) {
    const auto grid = make_grid(from, to, points, !linear);

    if (quantity == "shift") {
        if (param != "R" && param != "C")
            throw zpf::Error("shift sweeps support --param R or C (parallel RC)");
        if (co.R <= 0.0 && param != "R")
            throw zpf::Error("shift sweep needs --R");
        if (co.C <= 0.0 && param != "C")
            throw zpf::Error("shift sweep needs --C");
        tp.validate();
        const double w10 = tp.omega10();
        std::vector<Row> rows;
        size_t failed = 0;
        for (double v : grid) {
            const double R = param == "R" ? v : co.R;
            const double C = param == "C" ? v : co.C;
            Row row{{"param", Cell::number(v)}};
            try {
                auto net = zpf::builtin::parallel_RC(R, C);
                auto shift = zpf::level_shift(tp, zpf::node_spectrum(net), qo.quad);
                row.push_back({"delta_over_omega10", Cell::number(shift.delta / w10)});
                row.push_back({"gamma_over_omega10", Cell::number(shift.gamma / w10)});
                row.push_back({"valid", Cell::boolean(true)});
                row.push_back({"error", Cell::text("")});
            } catch (const zpf::Error& e) {
                ++failed;
                row.push_back({"delta_over_omega10", Cell::text("")});
                row.push_back({"gamma_over_omega10", Cell::text("")});
                row.push_back({"valid", Cell::boolean(false)});
                row.push_back({"error", Cell::text(e.what())});
            }
            row.push_back({"validity_ok", Cell::boolean(true)});
            row.push_back({"renormalized", Cell::boolean(false)});
            rows.push_back(std::move(row));
        }
        write_output(rows, oo.format, oo.path);
        if (failed > 0)
            std::cerr << "warning: " << failed << " of " << grid.size()
                      << " points failed\n";
        return failures_to_exit(failed, grid.size());
    }

    if (quantity != "force") throw zpf::Error("--quantity must be force or shift");

    const bool sweep_y = param == "y";
    if (!sweep_y && go.y <= 0.0)
        throw zpf::Error("--y (separation) must be positive");
    if (!co.is_builtin() && !sweep_y)
        throw zpf::Error("netlist sweeps support --param y only");
    if (co.is_builtin() && param != "y" && param != "R" && param != "L" &&
        param != "C0")
        throw zpf::Error("--param must be one of y, R, L, C0");

    const auto geom = go.geometry();
    auto make_model = [&](double v) {
        if (!co.is_builtin()) return zpf::EnergyModel::from_network(co.network(), qo.quad);
        const double R = param == "R" ? v : co.R;
        const double L = param == "L" ? v : co.L;
        const double C0 = param == "C0" ? v : co.C0;
        return builtin_model(co.circuit, R, L, C0, qo.quad);
    };
    auto geom_at = [&](double v) {
        return std::make_pair(geom, sweep_y ? v : go.y);
    };
    auto sweep = zpf::sweep_force(param, grid, make_model, geom_at);

    // Validity cutoff per point, evaluated on the concrete network.
    std::vector<Row> rows;
    size_t failed = 0;
    for (const auto& p : sweep.points) {
        Row row{{"param", Cell::number(p.param)},
                {"force_N", p.valid ? Cell::number(p.force_N) : Cell::text("")},
                {"valid", Cell::boolean(p.valid)}};
        bool validity_ok = false;
        if (p.valid) {
            try {
                CircuitOpts pt = co;
                if (param == "R") pt.R = p.param;
                if (param == "L") pt.L = p.param;
                if (param == "C0") pt.C0 = p.param;
                const double y = sweep_y ? p.param : go.y;
                pt.C = geom.C_of_xi(y);
                auto net = pt.network();
                validity_ok =
                    zpf::check_validity(net, pt.C, qo.vp, qo.quad).validity_ok;
            } catch (const zpf::Error&) {
                validity_ok = false;
            }
        } else {
            ++failed;
        }
        row.push_back({"validity_ok", Cell::boolean(validity_ok)});
        row.push_back(
            {"renormalized",
             Cell::boolean(co.is_builtin() ? builtin_renormalized(co.circuit)
                                           : true)});
        row.push_back({"error", Cell::text(p.error)});
        rows.push_back(std::move(row));
    }
    write_output(rows, oo.format, oo.path);
    if (failed > 0)
        std::cerr << "warning: " << failed << " of " << sweep.points.size()
                  << " points failed\n";
    return failures_to_exit(failed, sweep.points.size());
}

int run_figure(const std::string& name, const QuadOpts& qo, const OutputOpts& oo) {
    std::vector<Row> rows;
    const double kDia = 15e-6;
    const double kY = 50e-9;

    if (name == "2b") {
        // U/U0 vs r for circuits I, II, III. Unit choices: I: U0 =
        // hbar/(2 pi R C0), r = C0/C; II: U0 = hbar R/L; III: U0 =
        // (hbar/2 pi) R/L, with r = L/(C R^2).
        for (double r : make_grid(1e-3, 1e3, 61, true)) {
            const double uI = zpf::closed_form_I(1.0, r, 1.0) /
                              (zpf::constants::hbar / (2.0 * zpf::constants::pi * r));
            rows.push_back({{"circuit", Cell::text("I")},
                            {"r", Cell::number(r)},
                            {"U_over_U0", Cell::number(uI)},
                            {"valid", Cell::boolean(true)},
                            {"validity_ok", Cell::boolean(true)},
                            {"renormalized", Cell::boolean(true)}});
        }
        for (double r : make_grid(1e-3, 1e3, 61, true)) {
            const double uII = zpf::closed_form_II(1.0, r, 1.0) / (zpf::constants::hbar / r);
            rows.push_back({{"circuit", Cell::text("II")},
                            {"r", Cell::number(r)},
                            {"U_over_U0", Cell::number(uII)},
                            {"valid", Cell::boolean(true)},
                            {"validity_ok", Cell::boolean(true)},
                            {"renormalized", Cell::boolean(false)}});
        }
        for (double r : make_grid(1e-3, 1e3, 61, true)) {
            const double uIII = zpf::closed_form_III(1.0, r, 1.0) /
                                (zpf::constants::hbar / (2.0 * zpf::constants::pi * r));
            rows.push_back({{"circuit", Cell::text("III")},
                            {"r", Cell::number(r)},
                            {"U_over_U0", Cell::number(uIII)},
                            {"valid", Cell::boolean(true)},
                            {"validity_ok", Cell::boolean(true)},
                            {"renormalized", Cell::boolean(true)}});
        }
    } else if (name == "2c") {
        // Circuit IV: U/U0 vs r = C0/C for a = 0.5 and a = 2, U0 = hbar/(R C0).
        for (double a : {0.5, 2.0}) {
            for (double r : make_grid(1e-2, 1e2, 49, true)) {
                const double R = 1.0, C = 1.0, C0 = r;
                const double L = a * a * R * R * C0;
                const double u = zpf::closed_form_IV(R, L, C0, C, qo.quad) /
                                 (zpf::constants::hbar / (R * C0));
                rows.push_back({{"a", Cell::number(a)},
                                {"r", Cell::number(r)},
                                {"U_over_U0", Cell::number(u)},
                                {"valid", Cell::boolean(true)},
                                {"validity_ok", Cell::boolean(true)},
                                {"renormalized", Cell::boolean(true)}});
            }
        }
    } else if (name == "3a" || name == "3b") {
        // Circuit II (R = 10 ohm, L = 0.1 nH) vs the plasma-model Casimir
        // force, as a function of plate separation. Both forces are
        // attractive; force_N is signed (negative = attractive).
        const double d = name == "3a" ? 15e-6 : 200e-6;
        const double A = zpf::constants::pi * d * d / 4.0;
        const double R = 10.0, L = 0.1e-9;
        auto geom = zpf::CapacitorGeometry::parallel_plate(A);
        auto model = zpf::EnergyModel::closed_II(R, L);
        for (double y : make_grid(1e-7, 1e-3, 41, true)) {
            const double f = zpf::force(model, geom, y);
            auto net = zpf::builtin::circuit_II(R, L);
            const bool ok =
                zpf::check_validity(net, geom.C_of_xi(y), qo.vp, qo.quad).validity_ok;
            rows.push_back({{"series", Cell::text("II")},
                            {"y_m", Cell::number(y)},
                            {"force_N", Cell::number(f)},
                            {"valid", Cell::boolean(true)},
                            {"validity_ok", Cell::boolean(ok)},
                            {"renormalized", Cell::boolean(false)}});
        }
        for (double y : make_grid(1e-7, 1e-3, 41, true)) {
            const double fc = zpf::casimir_plasma({100e-9, A, y}, qo.quad);
            rows.push_back({{"series", Cell::text("casimir")},
                            {"y_m", Cell::number(y)},
                            {"force_N", Cell::number(-fc)},
                            {"valid", Cell::boolean(true)},
                            {"validity_ok", Cell::boolean(true)},
                            {"renormalized", Cell::boolean(false)}});
        }
    } else if (name == "4a" || name == "4b" || name == "4c") {
        const double A = zpf::constants::pi * kDia * kDia / 4.0;
        auto geom = zpf::CapacitorGeometry::parallel_plate(A);
        struct Spec {
            std::string id, p2;
            double lo1, hi1, lo2, hi2;
        };
        const Spec spec = name == "4a" ? Spec{"I", "C0_F", 2.0, 20.0, 5e-15, 25e-15}
                          : name == "4b"
                              ? Spec{"II", "L_H", 1.0, 50.0, 0.02e-9, 0.2e-9}
                              : Spec{"III", "L_H", 100.0, 1000.0, 2e-12, 20e-12};
        for (double R : make_grid(spec.lo1, spec.hi1, 25, true)) {
            for (double p : make_grid(spec.lo2, spec.hi2, 25, true)) {
                const double L = name == "4a" ? 0.0 : p;
                const double C0 = name == "4a" ? p : 0.0;
                auto model = builtin_model(spec.id, R, L, C0, qo.quad);
                const double f = zpf::force(model, geom, kY);
                auto net = zpf::builtin::by_id(spec.id, R, L, C0, 0.0);
                const bool ok =
                    zpf::check_validity(net, geom.C_of_xi(kY), qo.vp, qo.quad)
                        .validity_ok;
                rows.push_back({{"R_ohm", Cell::number(R)},
                                {spec.p2, Cell::number(p)},
                                {"force_N", Cell::number(f)},
                                {"valid", Cell::boolean(true)},
                                {"validity_ok", Cell::boolean(ok)},
                                {"renormalized",
                                 Cell::boolean(builtin_renormalized(spec.id))}});
            }
        }
    } else if (name == "4d") {
        // Transmon: sqrt(E_C/8E_J) = 0.1, C_g/C_J = 0.1, omega0 = 2 pi 5 GHz,
        // coupled to a parallel RC environment.
        zpf::TransmonParams tp;
        const double w0 = 2.0 * zpf::constants::pi * 5e9;
        tp.E_C = 0.1 * zpf::constants::hbar * w0;
        tp.E_J = 12.5 * tp.E_C;
        tp.C_J = 1e-13;
        tp.C_g = 1e-14;
        const double w10 = tp.omega10();
        for (double R : make_grid(1.0, 100.0, 25, true)) {
            for (double C : make_grid(50e-15, 500e-15, 25, true)) {
                auto net = zpf::builtin::parallel_RC(R, C);
                auto shift = zpf::level_shift(tp, zpf::node_spectrum(net), qo.quad);
                rows.push_back(
                    {{"R_ohm", Cell::number(R)},
                     {"C_F", Cell::number(C)},
                     {"delta_over_omega10", Cell::number(shift.delta / w10)},
                     {"gamma_over_omega10", Cell::number(shift.gamma / w10)},
                     {"valid", Cell::boolean(true)},
                     {"validity_ok", Cell::boolean(true)},
                     {"renormalized", Cell::boolean(false)}});
            }
        }
    } else {
        throw zpf::Error("unknown figure '" + name +
                         "' (choose 2b, 2c, 3a, 3b, 4a, 4b, 4c, 4d)");
    }

    write_output(rows, oo.format, oo.path);
    return 0;
}

int run_snr(const CircuitOpts& co, const GeometryOpts& go, const QuadOpts& qo,
            const OutputOpts& oo, const std::string& modulate, double mod_depth,
            const zpf::MechanicalMode& mode, zpf::MeasurementConfig cfg,
            bool hz_convention) {
    if (!co.is_builtin() || co.circuit == "parallel-RC")
        throw zpf::Error("snr requires a built-in circuit id I, II, III or IV");
    if (go.y <= 0.0) throw zpf::Error("--y (separation) must be positive");
    const auto geom = go.geometry();

    auto force_at = [&](double R, double L, double C0) {
        return zpf::force(builtin_model(co.circuit, R, L, C0, qo.quad), geom, go.y);
    };
    double Z;
    std::function<double(double)> f_of_Z;
    if (modulate == "R") {
        Z = co.R;
        f_of_Z = [&](double v) { return force_at(v, co.L, co.C0); };
    } else if (modulate == "L") {
        Z = co.L;
        f_of_Z = [&](double v) { return force_at(co.R, v, co.C0); };
    } else if (modulate == "C0") {
        Z = co.C0;
        f_of_Z = [&](double v) { return force_at(co.R, co.L, v); };
    } else {
        throw zpf::Error("--modulate must be one of R, L, C0");
    }
    if (Z <= 0.0) throw zpf::Error("modulated parameter must be positive");

    const double f = f_of_Z(Z);
    const double h = 1e-5;
    const double dfdZ = (f_of_Z(Z * (1.0 + h)) - f_of_Z(Z * (1.0 - h))) / (2.0 * h * Z);

    auto rep = zpf::snr_report(f, dfdZ, Z, mod_depth, mode, cfg, hz_convention);

    CircuitOpts pt = co;
    pt.C = geom.C_of_xi(go.y);
    const bool ok = zpf::check_validity(pt.network(), pt.C, qo.vp, qo.quad).validity_ok;

    Row row{{"modulated_param", Cell::text(modulate)},
            {"force_N", Cell::number(rep.force_N)},
            {"eta", Cell::number(rep.eta)},
            {"x_dc_m", Cell::number(rep.x_dc)},
            {"x_s_m", Cell::number(rep.x_s)},
            {"x_N_m", Cell::number(rep.x_N)},
            {"snr", Cell::number(rep.snr)},
            {"validity_ok", Cell::boolean(ok)},
            {"renormalized", Cell::boolean(builtin_renormalized(co.circuit))}};
    write_output({row}, oo.format, oo.path);
    return 0;
}

int run_validate(const std::string& path, double C, const QuadOpts& qo,
                 const OutputOpts& oo) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(path);
        if (!f) throw zpf::Error("cannot open netlist: " + path);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    auto res = zpf::netlist::parse(text);
    for (const auto& d : res.diagnostics)
        std::cerr << path << ":" << d.line << ":" << d.col << ": " << d.message
                  << (d.token.empty() ? "" : " ('" + d.token + "')") << "\n";
    if (!res.ok()) return 1;

    const auto& net = *res.network;
    const auto validity = zpf::check_validity(net, C, qo.vp, qo.quad);
    Row row{{"elements", Cell::number(double(net.elements().size()))},
            {"nodes", Cell::number(double(net.nodes().size()))},
            {"has_resistor", Cell::boolean(net.has_resistor())},
            {"omega_max_rad_s", Cell::number(qo.vp.omega_max())},
            {"tail_fraction", Cell::number(validity.tail_fraction)},
            {"validity_ok", Cell::boolean(validity.validity_ok)},
            {"renormalized", Cell::boolean(true)}};
    write_output({row}, oo.format, oo.path);
    return 0;
}

const char* kSchemaHelp = R"(
Output: CSV (default) or JSON (--format json). CSV floats use a fixed
%.11e format (12 significant digits) so identical inputs give
byte-identical files; JSON mirrors the CSV rows as an array of objects.
Every row carries validity_ok and renormalized flags.

CSV schemas:
  energy    C_F,energy_J,abs_error_J,tail_fraction,reference_defined,validity_ok,renormalized
  force     y_m,force_N,valid,validity_ok,renormalized
  sweep     param,force_N,valid,validity_ok,renormalized,error          (--quantity force)
            param,delta_over_omega10,gamma_over_omega10,valid,error,validity_ok,renormalized
                                                                        (--quantity shift)
  figure 2b circuit,r,U_over_U0,valid,validity_ok,renormalized
  figure 2c a,r,U_over_U0,valid,validity_ok,renormalized
  figure 3a/3b series,y_m,force_N,valid,validity_ok,renormalized        (series: II | casimir)
  figure 4a R_ohm,C0_F,force_N,valid,validity_ok,renormalized
  figure 4b/4c R_ohm,L_H,force_N,valid,validity_ok,renormalized
  figure 4d R_ohm,C_F,delta_over_omega10,gamma_over_omega10,valid,validity_ok,renormalized
  snr       modulated_param,force_N,eta,x_dc_m,x_s_m,x_N_m,snr,validity_ok,renormalized
  validate  elements,nodes,has_resistor,omega_max_rad_s,tail_fraction,validity_ok,renormalized

Exit codes: 0 success (per-point failures become rows with valid=0 and a
warning), 1 input error, 2 numerical failure (divergent integral,
quadrature failure, or all sweep points failed).
)";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "zpf: zero-point fluctuation potentials, forces, and level shifts of "
        "linear lumped RLC circuits"};
    app.footer(kSchemaHelp);
    app.require_subcommand(1);

    CircuitOpts co;
    GeometryOpts go;
    QuadOpts qo;
    OutputOpts oo;

    // --- energy ---
    auto* energy = app.add_subcommand(
        "energy", "zero-point energy of the probe capacitor (raw or renormalized)");
    bool renormalize = false;
    co.attach(energy);
    go.attach(energy);
    qo.attach(energy);
    oo.attach(energy);
    energy->add_flag("--renormalize", renormalize,
                     "subtract the capacitor-shorted reference circuit");

    // --- force ---
    auto* force = app.add_subcommand(
        "force", "force between the probe-capacitor plates at one working point");
    std::string method = "analytic";
    co.attach(force, /*with_probe_C=*/false);
    go.attach(force);
    qo.attach(force);
    oo.attach(force);
    force->add_option("--method", method, "analytic or fd (finite difference)")
        ->check(CLI::IsMember({"analytic", "fd"}));

    // --- sweep ---
    auto* sweep = app.add_subcommand("sweep",
                                     "force or qubit shift vs a circuit parameter");
    std::string quantity = "force", param = "y";
    double from = 0.0, to = 0.0;
    int points = 25;
    bool linear = false;
    zpf::TransmonParams tp;
    {
        const double w0 = 2.0 * zpf::constants::pi * 5e9;
        tp.E_C = 0.1 * zpf::constants::hbar * w0;
        tp.E_J = 12.5 * tp.E_C;
        tp.C_J = 1e-13;
        tp.C_g = 1e-14;
    }
    co.attach(sweep);
    go.attach(sweep);
    qo.attach(sweep);
    oo.attach(sweep);
    sweep->add_option("--quantity", quantity, "force or shift");
    sweep->add_option("--param", param, "swept parameter: y, R, L, C0 (force); R, C (shift)");
    sweep->add_option("--from", from, "grid start")->required();
    sweep->add_option("--to", to, "grid end")->required();
    sweep->add_option("--points", points, "grid size (default 25)");
    sweep->add_flag("--linear", linear, "linear grid (default logarithmic)");
    sweep->add_option("--E-C", tp.E_C, "transmon charging energy, J (shift)");
    sweep->add_option("--E-J", tp.E_J, "Josephson energy, J (shift)");
    sweep->add_option("--C-g", tp.C_g, "coupling capacitance, F (shift)");
    sweep->add_option("--C-J", tp.C_J, "total qubit capacitance, F (shift)");

    // --- figure ---
    auto* figure = app.add_subcommand(
        "figure", "emit the dataset behind a named figure (2b 2c 3a 3b 4a 4b 4c 4d)");
    std::string fig_name;
    figure->add_option("name", fig_name, "figure id")->required();
    qo.attach(figure);
    oo.attach(figure);

    // --- snr ---
    auto* snr = app.add_subcommand(
        "snr", "dynamic-method measurement report for a force working point");
    std::string modulate = "R";
    double mod_depth = 0.05;
    zpf::MechanicalMode mode{48e-15, 2.0 * zpf::constants::pi * 10.56e6, 3.3e5};
    zpf::MeasurementConfig mcfg;
    mcfg.noise_floor_S_N = 1e-32;
    bool hz_convention = false;
    co.attach(snr, /*with_probe_C=*/false);
    go.attach(snr);
    qo.attach(snr);
    oo.attach(snr);
    snr->add_option("--modulate", modulate, "modulated parameter: R, L or C0");
    snr->add_option("--mod-depth", mod_depth, "relative modulation depth u (default 0.05)");
    snr->add_option("--mass", mode.mass, "mechanical mode mass, kg");
    snr->add_option("--Omega", mode.Omega, "mechanical resonance, rad/s");
    snr->add_option("--Q", mode.Q, "mechanical quality factor");
    snr->add_option("--noise-floor", mcfg.noise_floor_S_N,
                    "displacement noise floor S_N, m^2/Hz");
    snr->add_option("--bandwidth", mcfg.bandwidth_B,
                    "measurement bandwidth, s^-1 (default 0.01 Gamma)");
    snr->add_flag("--hz", hz_convention,
                  "treat the default bandwidth as 0.01 Gamma/(2 pi) Hz");

    // --- validate ---
    auto* validate = app.add_subcommand("validate",
                                        "netlist lint plus validity-cutoff check");
    std::string netlist_path;
    double probe_C = 1e-13;
    validate->add_option("netlist", netlist_path, "netlist path ('-' for stdin)")
        ->required();
    validate->add_option("--C", probe_C, "probe capacitance, F (default 1e-13)");
    qo.attach(validate);
    oo.attach(validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage problems are input errors
    }

    try {
        if (energy->parsed()) return run_energy(co, go, qo, oo, renormalize);
        if (force->parsed()) return run_force(co, go, qo, oo, method);
        if (sweep->parsed())
            return run_sweep(co, go, qo, oo, quantity, param, from, to, points,
                             linear, tp);
        if (figure->parsed()) return run_figure(fig_name, qo, oo);
        if (snr->parsed())
            return run_snr(co, go, qo, oo, modulate, mod_depth, mode, mcfg,
                           hz_convention);
        if (validate->parsed()) return run_validate(netlist_path, probe_C, qo, oo);
    } catch (const zpf::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const zpf::QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const zpf::IsolatedPoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const zpf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
