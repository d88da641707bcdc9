#pragma once

#include <array>
#include <string_view>
#include <vector>

// The four-node network. A and B hold 2N pure pairs toward C and D
// respectively (edges AC and DB), Werner pairs sit on AD and CB, and the
// optional CD edge holds maximally entangled pairs. Swappings are assigned
// to the paths ACDB / ACB / ADB in counts (x, y, z) with x + y + z = 2N.
// The pure edges are distilled according to the load they carry: an edge
// with load L <= N still yields N Bell pairs, a higher load forces a
// shallower distillation with a lower per-copy concurrence.

namespace qbraess {

inline constexpr int kMaxNHalf = 200;  // enumeration cap, (2N+1)(2N+2)/2 allocations

/// Default pure-edge Schmidt coefficient, alpha = 2^(-1/4). The choice makes
/// 2N copies distillable into exactly N Bell pairs.
double default_alpha();

struct NetworkConfig {
    int n_half = 20;       // N; each path pair carries N swappings at the original equilibrium
    double werner_p = 0.9;
    double alpha = default_alpha();
    bool has_cd_edge = true;

    /// True when the pure-edge concurrence does not exceed the Werner
    /// concurrence, i.e. the premise behind the equilibrium argument fails.
    bool premise_violated() const;
    /// True when N == 1; the paradox structure needs N > 1.
    bool degenerate_n() const;
};

struct FlowAllocation {
    int x = 0;  // path ACDB
    int y = 0;  // path ACB
    int z = 0;  // path ADB

    friend bool operator==(const FlowAllocation&, const FlowAllocation&) = default;
};

enum class PathId { ACDB, ACB, ADB };
enum class EdgeId { AC, CB, AD, DB, CD };

inline constexpr std::array<PathId, 3> kAllPaths{PathId::ACDB, PathId::ACB, PathId::ADB};

std::string_view to_string(PathId path);
std::string_view to_string(EdgeId edge);

/// Throws std::domain_error if the config violates its parameter ranges.
void validate(const NetworkConfig& config);

/// Throws std::domain_error if the allocation is invalid for the config
/// (negative counts, wrong total, or x > 0 without the CD edge).
void validate(const NetworkConfig& config, const FlowAllocation& alloc);

/// Number of swappings the edge participates in: AC carries x+y, DB carries
/// x+z, CB carries y, AD carries z, CD carries x.
int edge_load(const FlowAllocation& alloc, EdgeId edge);

/// Per-copy concurrence on the edge under the allocation. Pure edges are
/// distilled 2N -> max(load, N); loads below N still yield Bell pairs, of
/// which only a subset is consumed. Werner edges are never distilled. An
/// edge with load 0 reports 1 (multiplicative identity; it contributes to
/// no path average).
double edge_concurrence(const NetworkConfig& config, const FlowAllocation& alloc, EdgeId edge);

/// Concurrence of the state established via one swapping along the path:
/// the product of its edge concurrences. Throws std::invalid_argument for
/// ACDB on a network without the CD edge.
double path_concurrence(const NetworkConfig& config, const FlowAllocation& alloc, PathId path);

/// Average concurrence of the 2N established states,
/// (x*C_ACDB + y*C_ACB + z*C_ADB) / 2N.
double average_concurrence(const NetworkConfig& config, const FlowAllocation& alloc);

/// All valid allocations in lexicographic (x, then y) order.
/// Throws std::length_error when N exceeds kMaxNHalf.
std::vector<FlowAllocation> enumerate_allocations(const NetworkConfig& config);

}  // namespace qbraess
