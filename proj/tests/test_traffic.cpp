#include <stdexcept>

#include "doctest.h"
#include "qbraess/traffic.hpp"

using namespace qbraess::traffic;

TEST_CASE("link travel times") {
    CHECK(link_time(links()[0], 3) == 30.0);   // t1 = 10x
    CHECK(link_time(links()[4], 2) == 12.0);   // t5 = 10 + x
    CHECK(link_time(links()[1], 0) == 50.0);   // t2 = 50 + x
    CHECK_THROWS_AS(link_time(links()[0], -1), std::domain_error);
}

TEST_CASE("path travel times aggregate shared links") {
    CHECK(path_time(TrafficAllocation{3, 3, 0}, TrafficPath::ABD) == 83.0);
    CHECK(path_time(TrafficAllocation{2, 2, 2}, TrafficPath::ABCD) == 92.0);
    CHECK(path_time(TrafficAllocation{0, 0, 1}, TrafficPath::ABCD) == 31.0);
}

TEST_CASE("traffic equilibria reproduce the classical paradox") {
    const auto [without, avg_without] = traffic_nash(6, false);
    CHECK(without == TrafficAllocation{3, 3, 0});
    CHECK(avg_without == 83.0);

    const auto [with, avg_with] = traffic_nash(6, true);
    CHECK(with == TrafficAllocation{2, 2, 2});
    CHECK(avg_with == 92.0);

    CHECK(avg_with > avg_without);  // the shortcut hurts everyone

    const auto [two, avg_two] = traffic_nash(2, true);
    CHECK(two == TrafficAllocation{0, 0, 2});
    CHECK(avg_two == 52.0);
}

TEST_CASE("returned equilibria pass their own deviation check") {
    for (int vehicles : {1, 2, 4, 6, 9, 12}) {
        for (bool with5 : {false, true}) {
            const auto [alloc, avg] = traffic_nash(vehicles, with5);
            CHECK(is_traffic_nash(alloc, with5));
            CHECK(alloc.total() == vehicles);
            // the average is the flow-weighted mean of the path times
            double total = alloc.abd * path_time(alloc, TrafficPath::ABD) +
                           alloc.acd * path_time(alloc, TrafficPath::ACD) +
                           alloc.abcd * path_time(alloc, TrafficPath::ABCD);
            CHECK(avg == total / vehicles);
        }
    }
    CHECK_THROWS_AS(traffic_nash(0, true), std::domain_error);
}
