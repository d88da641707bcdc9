#include <cmath>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "frozen.hpp"
#include "qbraess/distillation.hpp"

using namespace qbraess;

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752;
}

TEST_CASE("tensor power schmidt spectra") {
    const auto one = tensor_spectrum(kInvSqrt2, 1);
    REQUIRE(one.weights.size() == 2);
    CHECK(one.weights[0] == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(one.weights[1] == doctest::Approx(1.0 - kInvSqrt2).epsilon(1e-12));

    const auto two = tensor_spectrum(kInvSqrt2, 2);
    REQUIRE(two.weights.size() == 4);
    CHECK(two.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(two.weights[1] == doctest::Approx(0.20710678118654752).epsilon(1e-12));
    CHECK(two.weights[2] == doctest::Approx(0.20710678118654752).epsilon(1e-12));
    CHECK(two.weights[3] == doctest::Approx(0.085786437626904951).epsilon(1e-12));

    const auto product = tensor_spectrum(1.0, 3);
    REQUIRE(product.weights.size() == 8);
    CHECK(product.weights[0] == 1.0);
    for (int i = 1; i < 8; ++i) CHECK(product.weights[i] == 0.0);

    CHECK_THROWS_AS(tensor_spectrum(kInvSqrt2, 21), std::length_error);
    CHECK_THROWS_AS(tensor_spectrum(0.3, 2), std::domain_error);
}

TEST_CASE("spectra sum to one and are sorted descending") {
    for (double a2 : {0.5, kInvSqrt2, 0.8, 0.97, 1.0}) {
        for (int n : {1, 2, 5, 9, 12}) {
            const auto spec = tensor_spectrum(a2, n);
            CHECK(spec.weights.size() == (std::size_t{1} << n));
            const double sum =
                std::accumulate(spec.weights.begin(), spec.weights.end(), 0.0);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
            for (std::size_t i = 1; i < spec.weights.size(); ++i) {
                CHECK(spec.weights[i - 1] >= spec.weights[i]);
            }
        }
    }
}

TEST_CASE("distilled schmidt coefficient") {
    CHECK(distilled_alpha(frozen::kAlphaQuarter, 6, 3) ==
          doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(distilled_alpha(frozen::kAlphaQuarter, 6, 4) ==
          doctest::Approx(frozen::kAlphaSixToFour).epsilon(1e-12));
    CHECK(distilled_alpha(frozen::kAlphaQuarter, 6, 6) ==
          doctest::Approx(frozen::kAlphaQuarter).epsilon(1e-12));

    CHECK_THROWS_AS(distilled_alpha(frozen::kAlphaQuarter, 6, 7), std::domain_error);
    CHECK_THROWS_AS(distilled_alpha(frozen::kAlphaQuarter, 6, 0), std::domain_error);
}

TEST_CASE("distilled concurrence") {
    // Bell branch is exact
    CHECK(distilled_concurrence(frozen::kAlphaQuarter, 6, 3) == 1.0);
    CHECK(distilled_concurrence(frozen::kAlphaQuarter, 6, 4) ==
          doctest::Approx(frozen::kConcSixToFour).epsilon(1e-12));
    // exponent n/m = 1/2 regardless of n
    CHECK(distilled_concurrence(frozen::kAlphaQuarter, 40, 40) ==
          doctest::Approx(frozen::kConcAlphaQuarter).epsilon(1e-12));
}

TEST_CASE("distilled concurrence is non-increasing in the copy count") {
    for (double alpha : {0.75, frozen::kAlphaQuarter, 0.95}) {
        const int n = 12;
        double prev = 1.0 + 1e-15;
        for (int m = n / 2; m <= n; ++m) {
            const double c = distilled_concurrence(alpha, n, m);
            CHECK(c <= prev + 1e-15);
            if (std::pow(alpha * alpha, double(n) / m) <= 0.5) CHECK(c == 1.0);
            prev = c;
        }
    }
}

TEST_CASE("majorization feasibility checker") {
    const auto same = tensor_spectrum(kInvSqrt2, 3);
    CHECK(majorization_feasible(same, same));

    // distilling four copies into three more entangled ones
    CHECK(majorization_feasible(tensor_spectrum(kInvSqrt2, 4),
                                tensor_spectrum(std::pow(2.0, -2.0 / 3.0), 3)));

    // entanglement cannot increase deterministically
    CHECK_FALSE(majorization_feasible(tensor_spectrum(kInvSqrt2, 1), tensor_spectrum(0.5, 1)));
}

TEST_CASE("closed-form rule never claims an infeasible transform") {
    // every transform the piecewise rule produces passes Nielsen's criterion
    for (int n_half = 1; n_half <= 6; ++n_half) {
        const int n = 2 * n_half;
        const auto source = tensor_spectrum(frozen::kAlphaQuarter * frozen::kAlphaQuarter, n);
        for (int m = n_half; m <= n; ++m) {
            const double target_a2 = distilled_alpha_sq(frozen::kAlphaQuarter, n, m);
            CHECK(majorization_feasible(source, tensor_spectrum(target_a2, m)));
        }
    }
}
