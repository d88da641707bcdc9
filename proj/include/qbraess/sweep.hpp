#pragma once

#include <vector>

#include "qbraess/game.hpp"
#include "qbraess/network.hpp"

// Grid evaluations behind the figure-data subcommands. Every row is an
// independent pure evaluation, so the grids are computed with a parallel
// kernel; the serial twin is kept as the reference the tests compare
// against. Rows are written by index, which keeps the output order and the
// bytes identical between the two.

namespace qbraess {

struct SweepRow {
    int x = 0;
    int y = 0;
    int z = 0;
    double c_acdb = 0.0;
    double c_acb = 0.0;
    double c_adb = 0.0;
    double c_avg_modified = 0.0;
    double c_avg_original_eq = 0.0;  // constant column: original-network equilibrium average

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Average concurrence of the original (no CD edge) network at equilibrium,
/// solved from the start allocation (0, N, N).
double original_equilibrium_average(const NetworkConfig& config);

/// Fig.4-style projection: rows over even x in {0, 2, ..., 2N} with
/// y = z = (2N - x)/2. Requires the CD edge.
std::vector<SweepRow> sweep_x_rows(const NetworkConfig& config);

/// Full surface: one row per allocation (x, y, z = 2N - x - y), in
/// enumerate_allocations order. Requires the CD edge.
std::vector<SweepRow> surface_rows(const NetworkConfig& config);

/// Serial reference for surface_rows.
std::vector<SweepRow> surface_rows_serial(const NetworkConfig& config);

}  // namespace qbraess
