#include "qbraess/network.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qbraess/concurrence.hpp"
#include "qbraess/distillation.hpp"

namespace qbraess {

double default_alpha() {
    static const double a = std::pow(2.0, -0.25);
    return a;
}

bool NetworkConfig::premise_violated() const {
    return concurrence_pure(alpha) <= concurrence_werner(werner_p);
}

bool NetworkConfig::degenerate_n() const { return n_half == 1; }

std::string_view to_string(PathId path) {
    switch (path) {
        case PathId::ACDB: return "ACDB";
        case PathId::ACB: return "ACB";
        case PathId::ADB: return "ADB";
    }
    return "?";
}

std::string_view to_string(EdgeId edge) {
    switch (edge) {
        case EdgeId::AC: return "AC";
        case EdgeId::CB: return "CB";
        case EdgeId::AD: return "AD";
        case EdgeId::DB: return "DB";
        case EdgeId::CD: return "CD";
    }
    return "?";
}

void validate(const NetworkConfig& config) {
    if (config.n_half < 1) {
        throw std::domain_error("network: N must be >= 1");
    }
    WernerState werner_check(config.werner_p);
    PureSchmidtState alpha_check(config.alpha);
    if (config.alpha >= 1.0) {
        throw std::domain_error("network: alpha must be < 1 (a product-state edge breaks every path)");
    }
}

void validate(const NetworkConfig& config, const FlowAllocation& alloc) {
    validate(config);
    if (alloc.x < 0 || alloc.y < 0 || alloc.z < 0) {
        throw std::domain_error("allocation: path counts must be non-negative");
    }
    if (alloc.x + alloc.y + alloc.z != 2 * config.n_half) {
        throw std::domain_error("allocation: x + y + z must equal 2N");
    }
    if (alloc.x > 0 && !config.has_cd_edge) {
        throw std::domain_error("allocation: x must be 0 without the CD edge");
    }
}

int edge_load(const FlowAllocation& alloc, EdgeId edge) {
    switch (edge) {
        case EdgeId::AC: return alloc.x + alloc.y;
        case EdgeId::DB: return alloc.x + alloc.z;
        case EdgeId::CB: return alloc.y;
        case EdgeId::AD: return alloc.z;
        case EdgeId::CD: return alloc.x;
    }
    return 0;
}

double edge_concurrence(const NetworkConfig& config, const FlowAllocation& alloc, EdgeId edge) {
    validate(config, alloc);
    if (edge == EdgeId::CD && !config.has_cd_edge) {
        throw std::invalid_argument("edge CD does not exist in this network variant");
    }
    const int load = edge_load(alloc, edge);
    if (load == 0) return 1.0;  // unused edge, multiplicative identity
    switch (edge) {
        case EdgeId::AC:
        case EdgeId::DB:
            return distilled_concurrence(config.alpha, 2 * config.n_half,
                                         std::max(load, config.n_half));
        case EdgeId::AD:
        case EdgeId::CB:
            return concurrence_werner(config.werner_p);
        case EdgeId::CD:
            return 1.0;
    }
    return 1.0;
}

namespace {

// Same as edge_concurrence but without re-validation; loads are derived
// inline so the solver's inner loop stays allocation-free.
double pure_edge_conc(const NetworkConfig& config, int load) {
    return distilled_concurrence(config.alpha, 2 * config.n_half,
                                 std::max(load, config.n_half));
}

double path_conc_unchecked(const NetworkConfig& config, const FlowAllocation& alloc, PathId path) {
    const double cw = concurrence_werner(config.werner_p);
    switch (path) {
        case PathId::ACB:
            return pure_edge_conc(config, alloc.x + alloc.y) * cw;
        case PathId::ADB:
            return cw * pure_edge_conc(config, alloc.x + alloc.z);
        case PathId::ACDB:
            return pure_edge_conc(config, alloc.x + alloc.y) *
                   pure_edge_conc(config, alloc.x + alloc.z);
    }
    return 0.0;
}

}  // namespace

double path_concurrence(const NetworkConfig& config, const FlowAllocation& alloc, PathId path) {
    validate(config, alloc);
    if (path == PathId::ACDB && !config.has_cd_edge) {
        throw std::invalid_argument("path ACDB requires the CD edge");
    }
    return path_conc_unchecked(config, alloc, path);
}

double average_concurrence(const NetworkConfig& config, const FlowAllocation& alloc) {
    validate(config, alloc);
    double total = 0.0;
    if (alloc.x > 0) total += alloc.x * path_conc_unchecked(config, alloc, PathId::ACDB);
    if (alloc.y > 0) total += alloc.y * path_conc_unchecked(config, alloc, PathId::ACB);
    if (alloc.z > 0) total += alloc.z * path_conc_unchecked(config, alloc, PathId::ADB);
    return total / (2.0 * config.n_half);
}

std::vector<FlowAllocation> enumerate_allocations(const NetworkConfig& config) {
    validate(config);
    if (config.n_half > kMaxNHalf) {
        throw std::length_error("enumerate_allocations: N = " + std::to_string(config.n_half) +
                                " exceeds cap " + std::to_string(kMaxNHalf));
    }
    const int total = 2 * config.n_half;
    std::vector<FlowAllocation> out;
    if (config.has_cd_edge) {
        out.reserve(static_cast<std::size_t>(total + 1) * (total + 2) / 2);
    } else {
        out.reserve(total + 1);
    }
    const int x_max = config.has_cd_edge ? total : 0;
    for (int x = 0; x <= x_max; ++x) {
        for (int y = 0; y + x <= total; ++y) {
            out.push_back({x, y, total - x - y});
        }
    }
    return out;
}

}  // namespace qbraess
