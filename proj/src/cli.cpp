#include "squidsim/cli.hpp"

#include "squidsim/config.hpp"
#include "squidsim/errors.hpp"
#include "squidsim/gain_analysis.hpp"
#include "squidsim/sweeps.hpp"
#include "squidsim/transmission_line.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace squidsim {
namespace {

using Cell = std::variant<double, long long>;

struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_cell(const Cell& c) {
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(c));
    return buf;
}

void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t k = 0; k < t.columns.size(); ++k) os << (k ? "," : "") << t.columns[k];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << format_cell(row[k]);
        os << '\n';
    }
}

void write_json(const Table& t, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["command"] = t.command;
    doc["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t k = 0; k < row.size(); ++k)
            std::visit([&](auto v) { obj[t.columns[k]] = v; }, row[k]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

std::vector<double> linspace(double from, double to, int points) {
    if (points < 1) throw ConfigError("--points must be >= 1");
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k)
        v[k] = points == 1 ? from : from + (to - from) * k / static_cast<double>(points - 1);
    return v;
}

long long flag(bool b) { return b ? 1 : 0; }

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

struct Options {
    std::string config_path;
    bool json = false;
    std::string out_path;
    int count = 10;
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    bool renormalized = false;
    double fraction = 0.01;
    double omega = 0.0;
};

Table modes_table(const RunConfig& cfg, int count) {
    if (count < 1) throw ConfigError("--count must be >= 1");
    Table t{"modes",
            {"n", "wavenumber_per_m", "omega_rad_s", "inductance_h", "capacitance_f", "mutual_h"},
            {}};
    for (int n = 1; n <= count; ++n) {
        const Mode m = mode(cfg.line, n);
        t.rows.push_back({static_cast<long long>(n), m.wavenumber, m.frequency, m.inductance,
                          m.capacitance, m.mutual});
    }
    return t;
}

Table impedance_table(const RunConfig& cfg) {
    Table t{"impedance", {"omega_rad_s", "re_z_ohm", "im_z_ohm", "abs_z_ohm", "warn_flag"}, {}};
    const auto omegas = sweep_frequencies(cfg.sweep);
    for (const auto& p : impedance_sweep(cfg.line, cfg.input, omegas))
        t.rows.push_back({p.frequency, p.z.real(), p.z.imag(), std::abs(p.z), flag(p.warn)});
    return t;
}

Table iv_table(const RunConfig& cfg, const Options& o) {
    Table t{"iv",
            {"bias_current_a", "mean_voltage_v", "circulating_current_a",
             "josephson_frequency_rad_s", "converged"},
            {}};
    auto biases = linspace(o.from, o.to, o.points);
    for (double& b : biases) b *= cfg.squid.critical_current;
    const auto ops = iv_curve(cfg.squid, cfg.sim, biases);
    for (std::size_t k = 0; k < ops.size(); ++k)
        t.rows.push_back({biases[k], ops[k].mean_voltage, ops[k].circulating_current,
                          ops[k].josephson_frequency, flag(ops[k].converged)});
    return t;
}

Table transfer_table(const RunConfig& cfg, const Options& o) {
    Table t{"transfer",
            {"external_flux_wb", "mean_voltage_v", "circulating_current_a", "v_phi_v_per_wb",
             "j_phi_a_per_wb", "converged"},
            {}};
    auto fluxes = linspace(o.from, o.to, o.points);
    for (double& f : fluxes) f *= constants::flux_quantum;
    for (const auto& p : flux_scan(cfg.squid, cfg.sim, fluxes)) {
        const auto& op = p.transfer.operating_point;
        t.rows.push_back({p.flux, op.mean_voltage, op.circulating_current, p.transfer.v_phi,
                          p.transfer.j_phi, flag(op.converged)});
    }
    return t;
}

Table gain_table(const RunConfig& cfg, bool renormalized, std::ostream& err) {
    Table t{"gain",
            {"omega_rad_s", "re_gain", "im_gain", "abs_gain", "re_z", "im_z", "abs_z_loaded",
             "screening_ratio", "warn_flag"},
            {}};
    const auto omegas = sweep_frequencies(cfg.sweep);
    const auto points = gain_sweep(cfg.squid, cfg.line, cfg.input, cfg.sim, omegas);

    std::vector<GainPoint> renorm;
    if (renormalized) {
        err << "note: renorm_* columns use L_J' = L_J (1 - M_1^2/(L_J L_1)), an external "
               "screening convention included for comparison only\n";
        renorm = gain_sweep(renormalized_squid(cfg.squid, cfg.line), cfg.line, cfg.input,
                            cfg.sim, omegas);
        t.columns.insert(t.columns.end(), {"renorm_re_gain", "renorm_im_gain", "renorm_abs_gain"});
    }
    std::size_t warned = 0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& g = points[k];
        warned += g.warn ? 1 : 0;
        std::vector<Cell> row{g.frequency,      g.gain.real(),
                              g.gain.imag(),    std::abs(g.gain),
                              g.z.real(),       g.z.imag(),
                              std::abs(g.z_loaded), g.screening_ratio,
                              flag(g.warn)};
        if (renormalized) {
            const auto& r = renorm[k];
            row.insert(row.end(), {r.gain.real(), r.gain.imag(), std::abs(r.gain)});
        }
        t.rows.push_back(std::move(row));
    }
    if (warned)
        err << "warning: " << warned
            << " sweep point(s) lie outside [0.5, 1.5] omega_1 where the lumped input model "
               "degrades\n";
    return t;
}

Table screening_table(const RunConfig& cfg) {
    Table t{"screening",
            {"mean_voltage_v", "josephson_frequency_rad_s", "omega_1_rad_s", "screening_ratio"},
            {}};
    const OperatingPoint op = run_to_steady(cfg.squid, cfg.sim);
    const double ratio = screening_ratio(op, cfg.line);
    t.rows.push_back(
        {op.mean_voltage, op.josephson_frequency, fundamental_frequency(cfg.line), ratio});
    return t;
}

Table validate_table(const RunConfig& cfg, const Options& o) {
    Table t{"validate",
            {"omega_rad_s", "josephson_frequency_rad_s", "gain_static", "gain_dynamic",
             "relative_deviation"},
            {}};
    const OperatingPoint op = run_to_steady(cfg.squid, cfg.sim);
    const double omega = o.omega > 0 ? o.omega : o.fraction * op.josephson_frequency;
    const auto r = validate_linear_response(cfg.squid, cfg.line, cfg.input, cfg.sim, omega);
    t.rows.push_back(
        {r.omega, op.josephson_frequency, r.gain_static, r.gain_dynamic, r.relative_deviation});
    return t;
}

void warn_about_config(const RunConfig& cfg, std::ostream& err) {
    if (beta_c(cfg.squid) > 1.0)
        err << "warning: beta_c = " << beta_c(cfg.squid)
            << " > 1; the SQUID may be hysteretic and results depend on the initial state\n";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Microstrip-coupled DC SQUID amplifier simulator", "squidsim"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", o.config_path, "Flat key = value configuration file")
            ->required();
        sub->add_flag("--json", o.json, "Emit one JSON document instead of CSV");
        sub->add_option("--out", o.out_path, "Write data to this file instead of stdout");
    };

    auto* modes = app.add_subcommand("modes", "Mode spectrum of the open-ended line");
    add_common(modes);
    modes->add_option("--count", o.count, "Number of modes")->capture_default_str();

    auto* impedance = app.add_subcommand("impedance", "Forward impedance over the sweep");
    add_common(impedance);

    auto* iv = app.add_subcommand("iv", "Mean voltage vs bias current (bias in units of I_c)");
    add_common(iv);
    iv->add_option("--from", o.from, "First bias / I_c")->default_val(0.0);
    iv->add_option("--to", o.to, "Last bias / I_c")->default_val(3.0);
    iv->add_option("--points", o.points, "Number of bias points")->default_val(31);

    auto* transfer = app.add_subcommand("transfer", "V_Phi and J_Phi vs flux (in units of Phi_0)");
    add_common(transfer);
    transfer->add_option("--from", o.from, "First flux / Phi_0")->default_val(0.0);
    transfer->add_option("--to", o.to, "Last flux / Phi_0")->default_val(1.0);
    transfer->add_option("--points", o.points, "Number of flux points")->default_val(17);

    auto* gain = app.add_subcommand("gain", "Small-signal gain over the sweep");
    add_common(gain);
    gain->add_flag("--renormalized", o.renormalized,
                   "Also evaluate the gain with a screened loop inductance");

    auto* screening = app.add_subcommand("screening", "High-frequency coupling suppression");
    add_common(screening);

    auto* validate_cmd =
        app.add_subcommand("validate", "Compare static and dynamic linear response");
    add_common(validate_cmd);
    validate_cmd->add_option("--fraction", o.fraction, "Drive frequency as a fraction of omega_J")
        ->capture_default_str();
    validate_cmd->add_option("--omega", o.omega, "Drive frequency in rad/s (overrides --fraction)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        set_worker_count(worker_count_from_env());
        const RunConfig cfg = load_config(o.config_path);
        warn_about_config(cfg, err);

        Table table;
        if (modes->parsed())
            table = modes_table(cfg, o.count);
        else if (impedance->parsed())
            table = impedance_table(cfg);
        else if (iv->parsed())
            table = iv_table(cfg, o);
        else if (transfer->parsed())
            table = transfer_table(cfg, o);
        else if (gain->parsed())
            table = gain_table(cfg, o.renormalized, err);
        else if (screening->parsed())
            table = screening_table(cfg);
        else
            table = validate_table(cfg, o);

        std::ofstream file;
        std::ostream* sink = &out;
        if (!o.out_path.empty()) {
            file.open(o.out_path);
            if (!file) throw ConfigError("cannot open output file '" + o.out_path + "'");
            sink = &file;
        }
        if (o.json)
            write_json(table, *sink);
        else
            write_csv(table, *sink);
        return 0;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << '\n';
        return 3;
    } catch (const DivergenceError& e) {
        err << "divergence error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace squidsim
