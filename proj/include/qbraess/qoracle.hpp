#pragma once

#include <array>

#include <Eigen/Dense>

#include "qbraess/concurrence.hpp"

// Brute-force verification of the swap product rule. Two entangled pairs
// (A,C) and (D,B) are written as an explicit four-qubit density matrix, a
// projective Bell measurement is applied to the middle qubits C and D, and
// the Wootters concurrence of each post-measurement A-B state is averaged
// over the four outcomes. No closed-form shortcuts: this path must stay
// independent of the concurrence algebra it checks.

namespace qbraess::oracle {

/// Validated 4x4 two-qubit density matrix: Hermitian (1e-12), unit trace
/// (1e-12), eigenvalues >= -1e-10.
struct DensityMatrix {
    Eigen::Matrix4cd rho;

    explicit DensityMatrix(const Eigen::Matrix4cd& rho_);
};

struct SwapOutcome {
    double probability = 0.0;
    DensityMatrix post_state;  // A-B state after the outcome, Pauli frame applied
};

/// |psi><psi| for psi = alpha|00> + sqrt(1-alpha^2)|11>.
DensityMatrix pure_density(double alpha);

/// p|phi+><phi+| + (1-p)/4 I.
DensityMatrix werner_density(double p);

/// |phi+><phi+|.
DensityMatrix bell_density();

/// Density matrix of a link state.
DensityMatrix link_density(const LinkState& state);

/// Wootters concurrence C = max(0, l1-l2-l3-l4), with l_i the decreasing
/// square roots of the eigenvalues of rho*rho~. The eigenvalues are taken
/// from the Hermitian similar form sqrt(rho)*rho~*sqrt(rho).
double wootters_concurrence(const DensityMatrix& rho);

/// The four Bell-measurement outcomes of swapping at the middle nodes,
/// in the order phi+, phi-, psi+, psi-. Probabilities sum to 1.
std::array<SwapOutcome, 4> bell_swap_outcomes(const LinkState& a, const LinkState& b,
                                              bool apply_correction = true);

/// Average final-state concurrence sum_i p_i * C(rho_i) over the four
/// outcomes. This is the quantity the product rule predicts.
double bell_swap_average_concurrence(const LinkState& a, const LinkState& b);

/// Same average without the outcome-dependent Pauli correction. Concurrence
/// is invariant under local unitaries, so this must agree with the
/// corrected average; the comparison is itself a consistency check.
double bell_swap_average_concurrence_uncorrected(const LinkState& a, const LinkState& b);

}  // namespace qbraess::oracle
