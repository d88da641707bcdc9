// Command-line front end: equilibrium runs, figure-data sweeps, paradox
// region scans, the classical traffic baseline, and the density-matrix
// oracle check. Exit codes: 0 success, 1 invalid input, 2 numeric or
// convergence failure.
//
// A run-spec file (--config PATH) holds flat key=value lines mirroring the
// long flag names, e.g. "n=3" or "with-link5=false"; explicit flags override
// file values.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qbraess/game.hpp"
#include "qbraess/network.hpp"
#include "qbraess/qoracle.hpp"
#include "qbraess/report_io.hpp"
#include "qbraess/sweep.hpp"
#include "qbraess/traffic.hpp"

namespace {

using namespace qbraess;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNumeric = 2;

struct Options {
    int n = 20;
    double p = 0.9;
    double alpha = default_alpha();
    bool cd = true;
    std::string out = "-";
    std::string format = "csv";
    std::vector<int> start;
    double p_min = 0.34;
    double p_max = 1.0;
    double p_step = 0.005;
    int vehicles = 6;
    bool with_link5 = true;
    std::vector<double> oracle_alphas;
    std::vector<double> oracle_ps;
    double oracle_tol = 1e-6;
    std::string config_path;  // consumed by the pre-pass
};

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::invalid_argument("expected a boolean, got '" + v + "'");
}

template <typename T>
std::vector<T> parse_list(const std::string& v) {
    std::vector<T> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if constexpr (std::is_same_v<T, int>) {
            out.push_back(std::stoi(item));
        } else {
            out.push_back(std::stod(item));
        }
    }
    return out;
}

// Applies one run-spec entry; keys mirror the long flag names.
void apply_spec_entry(Options& opts, const std::string& key, const std::string& value) {
    if (key == "n") opts.n = std::stoi(value);
    else if (key == "p") opts.p = std::stod(value);
    else if (key == "alpha") opts.alpha = std::stod(value);
    else if (key == "cd") opts.cd = parse_bool(value);
    else if (key == "out") opts.out = value;
    else if (key == "format") {
        if (value != "csv" && value != "json") {
            throw std::invalid_argument("format must be csv or json, got '" + value + "'");
        }
        opts.format = value;
    }
    else if (key == "start") opts.start = parse_list<int>(value);
    else if (key == "p-min") opts.p_min = std::stod(value);
    else if (key == "p-max") opts.p_max = std::stod(value);
    else if (key == "p-step") opts.p_step = std::stod(value);
    else if (key == "vehicles") opts.vehicles = std::stoi(value);
    else if (key == "with-link5") opts.with_link5 = parse_bool(value);
    else if (key == "alphas") opts.oracle_alphas = parse_list<double>(value);
    else if (key == "ps") opts.oracle_ps = parse_list<double>(value);
    else if (key == "tolerance") opts.oracle_tol = std::stod(value);
    else throw std::invalid_argument("unknown run-spec key '" + key + "'");
}

// Loads the file named by a --config flag, if present, before CLI parsing;
// values become the defaults that explicit flags then override.
void preload_run_spec(int argc, char** argv, Options& opts) {
    std::string path;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
    }
    if (path.empty()) return;

    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open run-spec file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        apply_spec_entry(opts, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

io::Format parse_format(const std::string& f) {
    if (f == "json") return io::Format::json;
    return io::Format::csv;
}

int write_output(const std::string& out, const std::string& content) {
    if (out == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file: " << out << "\n";
        return kExitBadInput;
    }
    file << content;
    return kExitOk;
}

NetworkConfig make_config(const Options& opts) {
    NetworkConfig config{.n_half = opts.n, .werner_p = opts.p, .alpha = opts.alpha,
                         .has_cd_edge = opts.cd};
    validate(config);
    if (config.premise_violated()) {
        std::cerr << "warning: pure-edge concurrence does not exceed the Werner concurrence;"
                  << " the equilibrium-shift premise fails at these parameters\n";
    }
    if (config.degenerate_n()) {
        std::cerr << "warning: N = 1; the paradox structure needs N > 1\n";
    }
    return config;
}

FlowAllocation parse_start(const Options& opts, const NetworkConfig& config) {
    if (opts.start.empty()) {
        return FlowAllocation{0, config.n_half, config.n_half};
    }
    if (opts.start.size() != 3) {
        throw std::invalid_argument("--start expects x,y,z");
    }
    FlowAllocation alloc{opts.start[0], opts.start[1], opts.start[2]};
    validate(config, alloc);
    return alloc;
}

int cmd_equilibrium(const Options& opts) {
    const NetworkConfig config = make_config(opts);
    const FlowAllocation from = parse_start(opts, config);
    const EquilibriumReport report = find_nash(config, from);
    const int rc = write_output(opts.out, io::render_equilibrium(config, report,
                                                                 parse_format(opts.format)));
    if (rc != kExitOk) return rc;
    if (!report.converged) {
        std::cerr << "error: best-response dynamics did not converge within the pass cap\n";
        return kExitNumeric;
    }
    return kExitOk;
}

int cmd_sweep_x(const Options& opts) {
    const NetworkConfig config = make_config(opts);
    return write_output(opts.out, io::render_sweep(sweep_x_rows(config),
                                                   parse_format(opts.format)));
}

int cmd_surface(const Options& opts) {
    const NetworkConfig config = make_config(opts);
    return write_output(opts.out, io::render_surface(surface_rows(config),
                                                     parse_format(opts.format)));
}

int cmd_paradox_region(const Options& opts) {
    if (!(opts.p_min >= 1.0 / 3.0 - 1e-12 && opts.p_max <= 1.0 + 1e-12 &&
          opts.p_min <= opts.p_max)) {
        std::cerr << "error: p grid must lie within [1/3, 1]\n";
        return kExitBadInput;
    }
    if (opts.p_step <= 0.0) {
        std::cerr << "error: --p-step must be positive\n";
        return kExitBadInput;
    }
    std::vector<double> ps;
    for (int k = 0;; ++k) {
        const double p = opts.p_min + k * opts.p_step;
        if (p > opts.p_max + 1e-12) break;
        ps.push_back(std::min(p, 1.0));
    }
    const auto rows = paradox_region(opts.n, opts.alpha, ps);
    const int rc = write_output(opts.out, io::render_paradox_region(rows,
                                                                    parse_format(opts.format)));
    if (rc != kExitOk) return rc;
    std::cerr << io::paradox_region_summary(rows);
    return kExitOk;
}

int cmd_traffic(const Options& opts) {
    const auto [alloc, avg] = traffic::traffic_nash(opts.vehicles, opts.with_link5);
    return write_output(opts.out, io::render_traffic(opts.vehicles, opts.with_link5, alloc, avg,
                                                     parse_format(opts.format)));
}

int cmd_oracle_check(const Options& opts) {
    std::vector<double> alphas = opts.oracle_alphas;
    std::vector<double> ps = opts.oracle_ps;
    if (alphas.empty()) alphas = {0.7071, 0.7711, 0.8409, 0.92, 0.98};
    if (ps.empty()) ps = {0.4, 0.6, 0.8, 0.9, 1.0};
    if (alphas.size() * ps.size() + alphas.size() > 100) {
        std::cerr << "error: oracle grid capped at 100 points\n";
        return kExitBadInput;
    }

    std::vector<io::OracleCheckRow> rows;
    double max_dev = 0.0;
    for (double alpha : alphas) {
        for (double p : ps) {
            io::OracleCheckRow row;
            row.partner = "werner";
            row.alpha = alpha;
            row.p = p;
            row.closed_form = concurrence_pure(alpha) * concurrence_werner(p);
            row.oracle = oracle::bell_swap_average_concurrence(PureSchmidtState(alpha),
                                                               WernerState(p));
            row.abs_dev = std::abs(row.oracle - row.closed_form);
            max_dev = std::max(max_dev, row.abs_dev);
            rows.push_back(row);
        }
        io::OracleCheckRow row;
        row.partner = "bell";
        row.alpha = alpha;
        row.closed_form = concurrence_pure(alpha);
        row.oracle = oracle::bell_swap_average_concurrence(PureSchmidtState(alpha), BellState{});
        row.abs_dev = std::abs(row.oracle - row.closed_form);
        max_dev = std::max(max_dev, row.abs_dev);
        rows.push_back(row);
    }

    const int rc = write_output(opts.out, io::render_oracle_check(rows,
                                                                  parse_format(opts.format)));
    if (rc != kExitOk) return rc;
    std::cerr << "max |oracle - closed form| = " << io::format_real(max_dev) << "\n";
    if (max_dev > opts.oracle_tol) {
        std::cerr << "error: oracle deviation exceeds tolerance "
                  << io::format_real(opts.oracle_tol) << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, Options& opts, bool with_network = true) {
    // registered so CLI11 accepts the flag; the value was applied by the pre-pass
    cmd->add_option("--config", opts.config_path, "Run-spec file with key=value defaults");
    if (with_network) {
        cmd->add_option("--n", opts.n, "Half swapping count N (2N swappings total)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--p", opts.p, "Werner mixing parameter");
        cmd->add_option("--alpha", opts.alpha, "Pure-edge Schmidt coefficient");
        cmd->add_flag("--cd,!--no-cd", opts.cd, "Include the CD edge (default on)");
    }
    cmd->add_option("--out", opts.out, "Output path, '-' for stdout");
    cmd->add_option("--format", opts.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    try {
        preload_run_spec(argc, argv, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    CLI::App app{"Entanglement-swapping path game on the four-node network: equilibria, "
                 "figure data, and oracle checks"};
    app.require_subcommand(1);

    auto* eq = app.add_subcommand("equilibrium", "Best-response equilibrium of one network");
    add_common(eq, opts);
    eq->add_option("--start", opts.start, "Start allocation x,y,z (default 0,N,N)")
        ->delimiter(',');

    auto* sweep = app.add_subcommand("sweep-x", "Average concurrence along y = z (even x)");
    add_common(sweep, opts);

    auto* surface = app.add_subcommand("surface", "Per-path concurrences over the (x, y) grid");
    add_common(surface, opts);

    auto* region = app.add_subcommand("paradox-region", "Scan p for the paradox interval");
    add_common(region, opts);
    region->add_option("--p-min", opts.p_min, "Scan start (>= 1/3)");
    region->add_option("--p-max", opts.p_max, "Scan end (<= 1)");
    region->add_option("--p-step", opts.p_step, "Scan step");

    auto* traffic_cmd = app.add_subcommand("traffic", "Classical Braess baseline");
    add_common(traffic_cmd, opts, /*with_network=*/false);
    traffic_cmd->add_option("--vehicles", opts.vehicles, "Total vehicles")
        ->check(CLI::PositiveNumber);
    traffic_cmd->add_flag("--with-link5,!--without-link5", opts.with_link5,
                          "Include the shortcut link (default on)");

    auto* oracle_cmd = app.add_subcommand("oracle-check",
                                          "Density-matrix oracle vs the product rule");
    add_common(oracle_cmd, opts, /*with_network=*/false);
    oracle_cmd->add_option("--alphas", opts.oracle_alphas, "Pure-state grid")->delimiter(',');
    oracle_cmd->add_option("--ps", opts.oracle_ps, "Werner grid")->delimiter(',');
    oracle_cmd->add_option("--tolerance", opts.oracle_tol,
                           "Max allowed |oracle - closed form|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message or requested help
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (eq->parsed()) return cmd_equilibrium(opts);
        if (sweep->parsed()) return cmd_sweep_x(opts);
        if (surface->parsed()) return cmd_surface(opts);
        if (region->parsed()) return cmd_paradox_region(opts);
        if (traffic_cmd->parsed()) return cmd_traffic(opts);
        if (oracle_cmd->parsed()) return cmd_oracle_check(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
