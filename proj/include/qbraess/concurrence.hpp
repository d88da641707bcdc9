#pragma once

#include <span>
#include <variant>

// Two-qubit entanglement resources and their concurrence algebra.
//
// Three kinds of link states appear in the network model:
//   - non-maximal pure states  a|00> + sqrt(1-a^2)|11>,   C = 2a*sqrt(1-a^2)
//   - Werner states            p|phi+><phi+| + (1-p)/4 I,  C = (3p-1)/2
//   - Bell states (a = 1/sqrt2 as its own tag),            C = 1
// Path concurrences compose multiplicatively along a swapping chain.

namespace qbraess {

// Larger Schmidt coefficient by convention, so alpha >= 1/sqrt2. A small
// slack below the boundary is accepted because grid inputs are often given
// as decimal roundings of 1/sqrt2 (e.g. 0.7071).
inline constexpr double kAlphaBoundarySlack = 1e-4;

struct PureSchmidtState {
    double alpha;

    explicit PureSchmidtState(double alpha_);
};

struct WernerState {
    double p;  // entangled regime: 1/3 <= p <= 1

    explicit WernerState(double p_);
};

struct BellState {};

using LinkState = std::variant<PureSchmidtState, WernerState, BellState>;

/// C = 2*alpha*sqrt(1-alpha^2) for the larger Schmidt coefficient alpha.
double concurrence_pure(double alpha);

/// Concurrence 2*sqrt(a2*(1-a2)) from the squared larger coefficient a2.
/// Exact 1.0 at a2 == 0.5, which the distillation rule relies on.
double concurrence_from_schmidt_sq(double alpha_sq);

/// C = (3p-1)/2 for a Werner state with mixing parameter p.
double concurrence_werner(double p);

/// Concurrence of any link state (Bell -> 1).
double link_concurrence(const LinkState& state);

/// Concurrence of a swapping chain: the product of the link concurrences.
/// Throws std::invalid_argument on an empty chain.
double chain_concurrence(std::span<const double> links);

}  // namespace qbraess
