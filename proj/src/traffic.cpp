#include "qbraess/traffic.hpp"

#include <stdexcept>

namespace qbraess::traffic {

const std::array<TrafficLink, 5>& links() {
    static const std::array<TrafficLink, 5> kLinks{{
        {1, 0.0, 10.0},   // t1 = 10x
        {2, 50.0, 1.0},   // t2 = 50 + x
        {3, 0.0, 10.0},   // t3 = 10x
        {4, 50.0, 1.0},   // t4 = 50 + x
        {5, 10.0, 1.0},   // t5 = 10 + x
    }};
    return kLinks;
}

std::string_view to_string(TrafficPath path) {
    switch (path) {
        case TrafficPath::ABD: return "ABD";
        case TrafficPath::ACD: return "ACD";
        case TrafficPath::ABCD: return "ABCD";
    }
    return "?";
}

double link_time(const TrafficLink& link, int flow) {
    if (flow < 0) throw std::domain_error("link flow must be non-negative");
    return link.a + link.b * flow;
}

double path_time(const TrafficAllocation& alloc, TrafficPath path) {
    const auto& l = links();
    const int f1 = alloc.abd + alloc.abcd;
    const int f3 = alloc.acd + alloc.abcd;
    switch (path) {
        case TrafficPath::ABD:
            return link_time(l[0], f1) + link_time(l[3], alloc.abd);
        case TrafficPath::ACD:
            return link_time(l[1], alloc.acd) + link_time(l[2], f3);
        case TrafficPath::ABCD:
            return link_time(l[0], f1) + link_time(l[4], alloc.abcd) + link_time(l[2], f3);
    }
    return 0.0;
}

double average_time(const TrafficAllocation& alloc) {
    if (alloc.total() <= 0) throw std::domain_error("average_time: empty allocation");
    const double total = alloc.abd * path_time(alloc, TrafficPath::ABD) +
                         alloc.acd * path_time(alloc, TrafficPath::ACD) +
                         alloc.abcd * path_time(alloc, TrafficPath::ABCD);
    return total / alloc.total();
}

namespace {

int count_on(const TrafficAllocation& alloc, TrafficPath path) {
    switch (path) {
        case TrafficPath::ABD: return alloc.abd;
        case TrafficPath::ACD: return alloc.acd;
        case TrafficPath::ABCD: return alloc.abcd;
    }
    return 0;
}

TrafficAllocation moved(TrafficAllocation alloc, TrafficPath from, TrafficPath to) {
    auto bump = [&](TrafficPath p, int d) {
        switch (p) {
            case TrafficPath::ABD: alloc.abd += d; break;
            case TrafficPath::ACD: alloc.acd += d; break;
            case TrafficPath::ABCD: alloc.abcd += d; break;
        }
    };
    bump(from, -1);
    bump(to, +1);
    return alloc;
}

}  // namespace

bool is_traffic_nash(const TrafficAllocation& alloc, bool with_link5) {
    for (TrafficPath src : kAllTrafficPaths) {
        if (src == TrafficPath::ABCD && !with_link5) continue;
        if (count_on(alloc, src) == 0) continue;
        const double current = path_time(alloc, src);
        for (TrafficPath dst : kAllTrafficPaths) {
            if (dst == src) continue;
            if (dst == TrafficPath::ABCD && !with_link5) continue;
            if (path_time(moved(alloc, src, dst), dst) < current - 1e-9) return false;
        }
    }
    return true;
}

std::pair<TrafficAllocation, double> traffic_nash(int vehicles, bool with_link5) {
    if (vehicles < 1) throw std::domain_error("traffic_nash: need at least one vehicle");
    for (int abd = 0; abd <= vehicles; ++abd) {
        for (int acd = 0; acd + abd <= vehicles; ++acd) {
            const TrafficAllocation alloc{abd, acd, vehicles - abd - acd};
            if (alloc.abcd > 0 && !with_link5) continue;
            if (is_traffic_nash(alloc, with_link5)) {
                return {alloc, average_time(alloc)};
            }
        }
    }
    // A pure equilibrium always exists in this congestion game; reaching
    // this line means the deviation check and the enumeration disagree.
    throw std::logic_error("traffic_nash: no equilibrium found");
}

}  // namespace qbraess::traffic
