#pragma once

#include <array>
#include <string_view>
#include <utility>

// Braess's original traffic example, used as a validation baseline for the
// game machinery. Four nodes A, B, C, D; 6 vehicles travel A -> D over the
// paths ABD (links 1,4), ACD (links 2,3) and, when the shortcut link 5 is
// present, ABCD (links 1,5,3). Link travel times are linear in the flow:
//   t1 = t3 = 10x,  t2 = t4 = 50 + x,  t5 = 10 + x.

namespace qbraess::traffic {

struct TrafficLink {
    int id = 0;       // 1..5
    double a = 0.0;   // constant latency term
    double b = 0.0;   // per-vehicle latency slope
};

/// The five links of the example network, index i holds link i+1.
const std::array<TrafficLink, 5>& links();

enum class TrafficPath { ABD, ACD, ABCD };

inline constexpr std::array<TrafficPath, 3> kAllTrafficPaths{
    TrafficPath::ABD, TrafficPath::ACD, TrafficPath::ABCD};

std::string_view to_string(TrafficPath path);

struct TrafficAllocation {
    int abd = 0;
    int acd = 0;
    int abcd = 0;  // 0 when link 5 is absent

    int total() const { return abd + acd + abcd; }
    friend bool operator==(const TrafficAllocation&, const TrafficAllocation&) = default;
};

/// Travel time a + b*flow of one link under the given flow.
double link_time(const TrafficLink& link, int flow);

/// Travel time along a path, with link flows induced by the full allocation
/// (link 1 carries abd+abcd, link 3 carries acd+abcd, link 5 carries abcd).
double path_time(const TrafficAllocation& alloc, TrafficPath path);

/// Average travel time over all vehicles in the allocation.
double average_time(const TrafficAllocation& alloc);

/// True iff no vehicle strictly reduces its own travel time by a unilateral
/// path switch, evaluated against post-deviation flows.
bool is_traffic_nash(const TrafficAllocation& alloc, bool with_link5);

/// Exhaustive enumeration; returns the lexicographically first equilibrium
/// allocation (ordered by abd, then acd) and its average travel time.
std::pair<TrafficAllocation, double> traffic_nash(int vehicles, bool with_link5);

}  // namespace qbraess::traffic
