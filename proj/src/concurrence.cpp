#include "qbraess/concurrence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qbraess {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void check_alpha(double alpha) {
    if (!(alpha >= kInvSqrt2 - kAlphaBoundarySlack && alpha <= 1.0 + 1e-12)) {
        throw std::domain_error("schmidt coefficient alpha out of range [1/sqrt2, 1]: " +
                                std::to_string(alpha));
    }
}

}  // namespace

PureSchmidtState::PureSchmidtState(double alpha_) : alpha(alpha_) {
    check_alpha(alpha);
}

WernerState::WernerState(double p_) : p(p_) {
    if (!(p >= 1.0 / 3.0 - 1e-12 && p <= 1.0 + 1e-12)) {
        throw std::domain_error("werner parameter p out of range [1/3, 1]: " +
                                std::to_string(p));
    }
}

double concurrence_pure(double alpha) {
    check_alpha(alpha);
    return 2.0 * alpha * std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
}

double concurrence_from_schmidt_sq(double alpha_sq) {
    if (!(alpha_sq >= 0.5 - 1e-12 && alpha_sq <= 1.0 + 1e-12)) {
        throw std::domain_error("squared schmidt coefficient out of range [1/2, 1]: " +
                                std::to_string(alpha_sq));
    }
    return 2.0 * std::sqrt(std::max(0.0, alpha_sq * (1.0 - alpha_sq)));
}

double concurrence_werner(double p) {
    WernerState check(p);
    return (3.0 * check.p - 1.0) / 2.0;
}

double link_concurrence(const LinkState& state) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PureSchmidtState>) {
                return concurrence_pure(s.alpha);
            } else if constexpr (std::is_same_v<T, WernerState>) {
                return concurrence_werner(s.p);
            } else {
                return 1.0;
            }
        },
        state);
}

double chain_concurrence(std::span<const double> links) {
    if (links.empty()) {
        throw std::invalid_argument("chain_concurrence: empty chain");
    }
    double c = 1.0;
    for (double l : links) c *= l;
    return c;
}

}  // namespace qbraess
