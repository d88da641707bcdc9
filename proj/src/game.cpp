#include "qbraess/game.hpp"

#include <array>
#include <stdexcept>

namespace qbraess {

namespace {

constexpr std::array<PathId, 3> kDeviatorOrder{PathId::ACB, PathId::ADB, PathId::ACDB};
constexpr std::array<PathId, 3> kDestinationOrder{PathId::ACDB, PathId::ACB, PathId::ADB};

int count_on(const FlowAllocation& alloc, PathId path) {
    switch (path) {
        case PathId::ACDB: return alloc.x;
        case PathId::ACB: return alloc.y;
        case PathId::ADB: return alloc.z;
    }
    return 0;
}

FlowAllocation moved(FlowAllocation alloc, PathId from, PathId to) {
    auto bump = [&](PathId p, int d) {
        switch (p) {
            case PathId::ACDB: alloc.x += d; break;
            case PathId::ACB: alloc.y += d; break;
            case PathId::ADB: alloc.z += d; break;
        }
    };
    bump(from, -1);
    bump(to, +1);
    return alloc;
}

bool path_valid(const NetworkConfig& config, PathId path) {
    return path != PathId::ACDB || config.has_cd_edge;
}

// Returns the post-deviation allocation of the first improving move, or
// nothing. Shared by best_response_step and is_nash so the two agree on
// what counts as an improvement.
std::pair<bool, FlowAllocation> first_improving_move(const NetworkConfig& config,
                                                     const FlowAllocation& alloc) {
    for (PathId src : kDeviatorOrder) {
        if (!path_valid(config, src) || count_on(alloc, src) == 0) continue;
        const double current = path_concurrence(config, alloc, src);
        for (PathId dst : kDestinationOrder) {
            if (dst == src || !path_valid(config, dst)) continue;
            const FlowAllocation next = moved(alloc, src, dst);
            if (path_concurrence(config, next, dst) > current + kImprovementEps) {
                return {true, next};
            }
        }
    }
    return {false, alloc};
}

}  // namespace

double payoff(const NetworkConfig& config, const FlowAllocation& alloc, PathId path) {
    return path_concurrence(config, alloc, path);
}

FlowAllocation best_response_step(const NetworkConfig& config, const FlowAllocation& alloc) {
    validate(config, alloc);
    return first_improving_move(config, alloc).second;
}

bool is_nash(const NetworkConfig& config, const FlowAllocation& alloc) {
    validate(config, alloc);
    return !first_improving_move(config, alloc).first;
}

EquilibriumReport find_nash(const NetworkConfig& config, const FlowAllocation& start,
                            int max_passes) {
    validate(config, start);
    if (max_passes <= 0) max_passes = 100 * config.n_half;

    EquilibriumReport report;
    FlowAllocation alloc = start;
    while (true) {
        auto [improved, next] = first_improving_move(config, alloc);
        if (!improved) {
            report.converged = true;
            break;
        }
        if (report.passes >= max_passes) break;  // cap reached, still improvable
        alloc = next;
        ++report.passes;
    }

    report.allocation = alloc;
    report.avg_concurrence = average_concurrence(config, alloc);
    report.is_nash = is_nash(config, alloc);
    for (PathId p : kAllPaths) {
        if (path_valid(config, p)) {
            report.path_concurrences[p] = path_concurrence(config, alloc, p);
        }
    }
    return report;
}

std::pair<FlowAllocation, double> social_optimum(const NetworkConfig& config) {
    const auto allocations = enumerate_allocations(config);
    FlowAllocation best = allocations.front();
    double best_avg = average_concurrence(config, best);
    for (const FlowAllocation& alloc : allocations) {
        const double avg = average_concurrence(config, alloc);
        if (avg > best_avg) {
            best = alloc;
            best_avg = avg;
        }
    }
    return {best, best_avg};
}

BraessReport detect_braess(const NetworkConfig& config_modified) {
    return detect_braess(config_modified,
                         FlowAllocation{0, config_modified.n_half, config_modified.n_half});
}

BraessReport detect_braess(const NetworkConfig& config_modified, const FlowAllocation& start) {
    if (!config_modified.has_cd_edge) {
        throw std::invalid_argument("detect_braess expects a config with the CD edge");
    }
    NetworkConfig original = config_modified;
    original.has_cd_edge = false;

    BraessReport report;
    report.original_eq = find_nash(original, start);
    report.modified_eq = find_nash(config_modified, start);
    report.gap = report.original_eq.avg_concurrence - report.modified_eq.avg_concurrence;
    report.paradox = report.gap > kParadoxEps;
    return report;
}

std::vector<std::pair<double, BraessReport>> paradox_region_serial(
    int n_half, double alpha, const std::vector<double>& p_values) {
    std::vector<std::pair<double, BraessReport>> out(p_values.size());
    for (std::size_t i = 0; i < p_values.size(); ++i) {
        NetworkConfig config{.n_half = n_half, .werner_p = p_values[i], .alpha = alpha,
                             .has_cd_edge = true};
        out[i] = {p_values[i], detect_braess(config)};
    }
    return out;
}

std::vector<std::pair<double, BraessReport>> paradox_region(int n_half, double alpha,
                                                            const std::vector<double>& p_values) {
    std::vector<std::pair<double, BraessReport>> out(p_values.size());
    const std::int64_t n = static_cast<std::int64_t>(p_values.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        NetworkConfig config{.n_half = n_half, .werner_p = p_values[i], .alpha = alpha,
                             .has_cd_edge = true};
        out[i] = {p_values[i], detect_braess(config)};
    }
    return out;
}

}  // namespace qbraess
