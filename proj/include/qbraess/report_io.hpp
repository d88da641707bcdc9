#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qbraess/game.hpp"
#include "qbraess/sweep.hpp"
#include "qbraess/traffic.hpp"

// Deterministic rendering of reports and grids. Reals are printed with 9
// significant digits ("%.9g"); identical inputs yield identical bytes.

namespace qbraess::io {

enum class Format { csv, json };

/// "%.9g" rendering of a double.
std::string format_real(double v);

std::string render_equilibrium(const NetworkConfig& config, const EquilibriumReport& report,
                               Format format);

/// Header: x,y,z,c_acdb,c_acb,c_adb,c_avg_modified,c_avg_original_eq
std::string render_sweep(const std::vector<SweepRow>& rows, Format format);

/// Sweep columns plus d_acdb_adb,d_acdb_acb,d_avg (differences derived per row).
std::string render_surface(const std::vector<SweepRow>& rows, Format format);

/// Header: p,paradox,gap
std::string render_paradox_region(const std::vector<std::pair<double, BraessReport>>& rows,
                                  Format format);

/// One-line empirical summary of the paradox interval (endpoints of the
/// p-range where the paradox holds), or a note that it never occurs.
std::string paradox_region_summary(const std::vector<std::pair<double, BraessReport>>& rows);

std::string render_traffic(int vehicles, bool with_link5, const traffic::TrafficAllocation& alloc,
                           double average, Format format);

struct OracleCheckRow {
    std::string partner;  // "werner" or "bell"
    double alpha = 0.0;
    double p = 0.0;  // meaningful only for partner == "werner"
    double closed_form = 0.0;
    double oracle = 0.0;
    double abs_dev = 0.0;
};

/// Header: alpha,partner,p,closed_form,oracle,abs_dev (p blank for bell rows).
std::string render_oracle_check(const std::vector<OracleCheckRow>& rows, Format format);

}  // namespace qbraess::io
