#include "qbraess/sweep.hpp"

#include <cstdint>
#include <stdexcept>

namespace qbraess {

namespace {

void require_cd_edge(const NetworkConfig& config) {
    if (!config.has_cd_edge) {
        throw std::invalid_argument("sweep grids describe the modified network; the CD edge is required");
    }
}

SweepRow make_row(const NetworkConfig& config, const FlowAllocation& alloc, double original_eq) {
    SweepRow row;
    row.x = alloc.x;
    row.y = alloc.y;
    row.z = alloc.z;
    row.c_acdb = path_concurrence(config, alloc, PathId::ACDB);
    row.c_acb = path_concurrence(config, alloc, PathId::ACB);
    row.c_adb = path_concurrence(config, alloc, PathId::ADB);
    row.c_avg_modified = average_concurrence(config, alloc);
    row.c_avg_original_eq = original_eq;
    return row;
}

}  // namespace

double original_equilibrium_average(const NetworkConfig& config) {
    NetworkConfig original = config;
    original.has_cd_edge = false;
    return find_nash(original, FlowAllocation{0, config.n_half, config.n_half}).avg_concurrence;
}

std::vector<SweepRow> sweep_x_rows(const NetworkConfig& config) {
    validate(config);
    require_cd_edge(config);
    const double original_eq = original_equilibrium_average(config);
    const int total = 2 * config.n_half;

    std::vector<SweepRow> rows;
    rows.reserve(config.n_half + 1);
    // y = z forces x even; odd x has no allocation on this projection line.
    for (int x = 0; x <= total; x += 2) {
        const int half = (total - x) / 2;
        rows.push_back(make_row(config, FlowAllocation{x, half, half}, original_eq));
    }
    return rows;
}

std::vector<SweepRow> surface_rows_serial(const NetworkConfig& config) {
    validate(config);
    require_cd_edge(config);
    const double original_eq = original_equilibrium_average(config);
    const auto allocations = enumerate_allocations(config);

    std::vector<SweepRow> rows(allocations.size());
    for (std::size_t i = 0; i < allocations.size(); ++i) {
        rows[i] = make_row(config, allocations[i], original_eq);
    }
    return rows;
}

std::vector<SweepRow> surface_rows(const NetworkConfig& config) {
    validate(config);
    require_cd_edge(config);
    const double original_eq = original_equilibrium_average(config);
    const auto allocations = enumerate_allocations(config);

    std::vector<SweepRow> rows(allocations.size());
    const std::int64_t n = static_cast<std::int64_t>(allocations.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        rows[i] = make_row(config, allocations[i], original_eq);
    }
    return rows;
}

}  // namespace qbraess
