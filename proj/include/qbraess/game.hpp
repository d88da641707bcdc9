#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qbraess/network.hpp"

// The selfish path-selection game. The 2N swappings are anonymous players;
// a profile is the aggregate (x, y, z). A player's payoff is the concurrence
// of its own final state under the full profile. A deviation moves one unit
// between path counts and is evaluated against the post-deviation allocation
// with all distillation loads recomputed.

namespace qbraess {

/// Minimum payoff gain for a deviation to count as improving.
inline constexpr double kImprovementEps = 1e-12;

/// Gap threshold above which the added edge counts as harmful.
inline constexpr double kParadoxEps = 1e-9;

struct EquilibriumReport {
    FlowAllocation allocation;
    double avg_concurrence = 0.0;
    std::map<PathId, double> path_concurrences;  // only paths valid for the config
    bool is_nash = false;
    int passes = 0;  // improving deviations applied
    bool converged = false;
};

struct BraessReport {
    EquilibriumReport original_eq;  // without the CD edge
    EquilibriumReport modified_eq;  // with the CD edge
    bool paradox = false;
    double gap = 0.0;  // original avg - modified avg
};

/// Payoff of a player on `path` under the profile `alloc`.
double payoff(const NetworkConfig& config, const FlowAllocation& alloc, PathId path);

/// Applies the first improving unilateral deviation, scanning deviating
/// players in the order (ACB, ADB, ACDB) and destinations in the order
/// (ACDB, ACB, ADB). Returns the input unchanged at a fixed point.
FlowAllocation best_response_step(const NetworkConfig& config, const FlowAllocation& alloc);

/// True iff no single-player deviation improves its payoff by more than
/// kImprovementEps.
bool is_nash(const NetworkConfig& config, const FlowAllocation& alloc);

/// Iterates best_response_step from `start` to a fixed point, capped at
/// max_passes deviations (default 100*N). Non-convergence is reported via
/// the flags, never thrown.
EquilibriumReport find_nash(const NetworkConfig& config, const FlowAllocation& start,
                            int max_passes = 0);

/// Exhaustive search for the allocation maximizing the average concurrence;
/// lexicographically smallest allocation on ties.
std::pair<FlowAllocation, double> social_optimum(const NetworkConfig& config);

/// Runs find_nash with and without the CD edge from `start` (default
/// (0, N, N), the original-network equilibrium) and compares the averages.
BraessReport detect_braess(const NetworkConfig& config_modified);
BraessReport detect_braess(const NetworkConfig& config_modified, const FlowAllocation& start);

/// detect_braess for each p in p_values; rows keep the input order.
/// Distinct p values are evaluated concurrently.
std::vector<std::pair<double, BraessReport>> paradox_region(int n_half, double alpha,
                                                            const std::vector<double>& p_values);

/// Serial reference for paradox_region.
std::vector<std::pair<double, BraessReport>> paradox_region_serial(
    int n_half, double alpha, const std::vector<double>& p_values);

}  // namespace qbraess
