#include "qbraess/report_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace qbraess::io {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* bool_str(bool b) { return b ? "true" : "false"; }

ordered_json allocation_json(const FlowAllocation& alloc) {
    return ordered_json{{"x", alloc.x}, {"y", alloc.y}, {"z", alloc.z}};
}

ordered_json report_json(const NetworkConfig& config, const EquilibriumReport& report) {
    ordered_json paths;
    for (const auto& [path, c] : report.path_concurrences) {
        paths[std::string(to_string(path))] = c;
    }
    return ordered_json{{"n", config.n_half},
                        {"p", config.werner_p},
                        {"alpha", config.alpha},
                        {"has_cd_edge", config.has_cd_edge},
                        {"allocation", allocation_json(report.allocation)},
                        {"path_concurrences", paths},
                        {"avg_concurrence", report.avg_concurrence},
                        {"is_nash", report.is_nash},
                        {"passes", report.passes},
                        {"converged", report.converged}};
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool with_differences) {
    std::string out = "x,y,z,c_acdb,c_acb,c_adb,c_avg_modified,c_avg_original_eq";
    if (with_differences) out += ",d_acdb_adb,d_acdb_acb,d_avg";
    out += '\n';
    for (const SweepRow& r : rows) {
        out += std::to_string(r.x) + ',' + std::to_string(r.y) + ',' + std::to_string(r.z);
        out += ',' + format_real(r.c_acdb) + ',' + format_real(r.c_acb) + ',' +
               format_real(r.c_adb) + ',' + format_real(r.c_avg_modified) + ',' +
               format_real(r.c_avg_original_eq);
        if (with_differences) {
            out += ',' + format_real(r.c_acdb - r.c_adb) + ',' + format_real(r.c_acdb - r.c_acb) +
                   ',' + format_real(r.c_avg_modified - r.c_avg_original_eq);
        }
        out += '\n';
    }
    return out;
}

ordered_json sweep_row_json(const SweepRow& r, bool with_differences) {
    ordered_json j{{"x", r.x},
                   {"y", r.y},
                   {"z", r.z},
                   {"c_acdb", r.c_acdb},
                   {"c_acb", r.c_acb},
                   {"c_adb", r.c_adb},
                   {"c_avg_modified", r.c_avg_modified},
                   {"c_avg_original_eq", r.c_avg_original_eq}};
    if (with_differences) {
        j["d_acdb_adb"] = r.c_acdb - r.c_adb;
        j["d_acdb_acb"] = r.c_acdb - r.c_acb;
        j["d_avg"] = r.c_avg_modified - r.c_avg_original_eq;
    }
    return j;
}

std::string sweep_render(const std::vector<SweepRow>& rows, Format format,
                         bool with_differences) {
    if (format == Format::csv) return sweep_csv(rows, with_differences);
    ordered_json arr = ordered_json::array();
    for (const SweepRow& r : rows) arr.push_back(sweep_row_json(r, with_differences));
    return arr.dump(2) + '\n';
}

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string render_equilibrium(const NetworkConfig& config, const EquilibriumReport& report,
                               Format format) {
    if (format == Format::json) return report_json(config, report).dump(2) + '\n';

    std::string out =
        "n,p,alpha,has_cd_edge,x,y,z,c_acdb,c_acb,c_adb,avg_concurrence,is_nash,passes,converged\n";
    out += std::to_string(config.n_half) + ',' + format_real(config.werner_p) + ',' +
           format_real(config.alpha) + ',' + bool_str(config.has_cd_edge) + ',';
    out += std::to_string(report.allocation.x) + ',' + std::to_string(report.allocation.y) + ',' +
           std::to_string(report.allocation.z) + ',';
    auto path_field = [&](PathId p) -> std::string {
        auto it = report.path_concurrences.find(p);
        return it == report.path_concurrences.end() ? std::string() : format_real(it->second);
    };
    out += path_field(PathId::ACDB) + ',' + path_field(PathId::ACB) + ',' +
           path_field(PathId::ADB) + ',';
    out += format_real(report.avg_concurrence) + ',' + bool_str(report.is_nash) + ',' +
           std::to_string(report.passes) + ',' + bool_str(report.converged) + '\n';
    return out;
}

std::string render_sweep(const std::vector<SweepRow>& rows, Format format) {
    return sweep_render(rows, format, false);
}

std::string render_surface(const std::vector<SweepRow>& rows, Format format) {
    return sweep_render(rows, format, true);
}

std::string render_paradox_region(const std::vector<std::pair<double, BraessReport>>& rows,
                                  Format format) {
    if (format == Format::csv) {
        std::string out = "p,paradox,gap\n";
        for (const auto& [p, report] : rows) {
            out += format_real(p);
            out += ',';
            out += bool_str(report.paradox);
            out += ',';
            out += format_real(report.gap);
            out += '\n';
        }
        return out;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& [p, report] : rows) {
        arr.push_back(ordered_json{{"p", p},
                                   {"paradox", report.paradox},
                                   {"gap", report.gap},
                                   {"original_avg", report.original_eq.avg_concurrence},
                                   {"modified_avg", report.modified_eq.avg_concurrence},
                                   {"modified_allocation", allocation_json(report.modified_eq.allocation)}});
    }
    return arr.dump(2) + '\n';
}

std::string paradox_region_summary(const std::vector<std::pair<double, BraessReport>>& rows) {
    bool any = false;
    double lo = 0.0, hi = 0.0;
    int count = 0;
    for (const auto& [p, report] : rows) {
        if (!report.paradox) continue;
        if (!any) lo = p;
        hi = p;
        ++count;
        any = true;
    }
    if (!any) return "paradox: absent on the scanned grid\n";
    return "paradox interval: p in [" + format_real(lo) + ", " + format_real(hi) + "] (" +
           std::to_string(count) + " of " + std::to_string(rows.size()) + " grid points)\n";
}

std::string render_traffic(int vehicles, bool with_link5, const traffic::TrafficAllocation& alloc,
                           double average, Format format) {
    const double t_abd = traffic::path_time(alloc, traffic::TrafficPath::ABD);
    const double t_acd = traffic::path_time(alloc, traffic::TrafficPath::ACD);
    const double t_abcd = traffic::path_time(alloc, traffic::TrafficPath::ABCD);

    if (format == Format::json) {
        ordered_json j{{"vehicles", vehicles},
                       {"with_link5", with_link5},
                       {"allocation",
                        ordered_json{{"abd", alloc.abd}, {"acd", alloc.acd}, {"abcd", alloc.abcd}}},
                       {"path_times", ordered_json{{"ABD", t_abd}, {"ACD", t_acd}}},
                       {"average_time", average}};
        if (with_link5) j["path_times"]["ABCD"] = t_abcd;
        return j.dump(2) + '\n';
    }
    std::string out = "vehicles,with_link5,abd,acd,abcd,t_abd,t_acd,t_abcd,average_time\n";
    out += std::to_string(vehicles) + ',' + bool_str(with_link5) + ',' +
           std::to_string(alloc.abd) + ',' + std::to_string(alloc.acd) + ',' +
           std::to_string(alloc.abcd) + ',' + format_real(t_abd) + ',' + format_real(t_acd) + ',';
    out += with_link5 ? format_real(t_abcd) : std::string();
    out += ',' + format_real(average) + '\n';
    return out;
}

std::string render_oracle_check(const std::vector<OracleCheckRow>& rows, Format format) {
    if (format == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const OracleCheckRow& r : rows) {
            ordered_json j{{"alpha", r.alpha}, {"partner", r.partner}};
            if (r.partner == "werner") j["p"] = r.p;
            j["closed_form"] = r.closed_form;
            j["oracle"] = r.oracle;
            j["abs_dev"] = r.abs_dev;
            arr.push_back(j);
        }
        return arr.dump(2) + '\n';
    }
    std::string out = "alpha,partner,p,closed_form,oracle,abs_dev\n";
    for (const OracleCheckRow& r : rows) {
        out += format_real(r.alpha) + ',' + r.partner + ',';
        out += r.partner == "werner" ? format_real(r.p) : std::string();
        out += ',' + format_real(r.closed_form) + ',' + format_real(r.oracle) + ',' +
               format_real(r.abs_dev) + '\n';
    }
    return out;
}

}  // namespace qbraess::io
