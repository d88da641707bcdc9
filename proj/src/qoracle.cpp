#include "qbraess/qoracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qbraess::oracle {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector4cd;
using cd = std::complex<double>;

using Matrix16cd = Eigen::Matrix<cd, 16, 16>;
using Isometry16x4 = Eigen::Matrix<cd, 16, 4>;

Matrix2cd pauli_x() {
    Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Matrix2cd pauli_z() {
    Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

// Bell basis on the measured pair, computational-basis convention
// phi± = (|00> ± |11>)/sqrt2, psi± = (|01> ± |10>)/sqrt2.
std::array<Vector4cd, 4> bell_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    Vector4cd phip, phim, psip, psim;
    phip << s, 0, 0, s;
    phim << s, 0, 0, -s;
    psip << 0, s, s, 0;
    psim << 0, s, -s, 0;
    return {phip, phim, psip, psim};
}

// Pauli frame fix applied to qubit B, indexed by Bell outcome.
std::array<Matrix2cd, 4> outcome_corrections() {
    return {Matrix2cd::Identity(), pauli_z(), pauli_x(),
            Matrix2cd(pauli_z() * pauli_x())};
}

void validate_density(const Eigen::Matrix4cd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - cd(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

// Hermitian PSD square root via spectral decomposition; eigenvalues within
// numerical noise below zero are clamped.
Matrix4cd psd_sqrt(const Matrix4cd& m) {
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(m);
    Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * d.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

// 16x4 isometry |a>|b> -> |a>|beta>|b> embedding the measured Bell vector
// on the middle qubits, with qubit order A, C, D, B.
Isometry16x4 middle_bra(const Vector4cd& beta) {
    Isometry16x4 iso = Isometry16x4::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const int col = 2 * a + b;
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                    iso(8 * a + 4 * c + 2 * d + b, col) = beta(2 * c + d);
                }
            }
        }
    }
    return iso;
}

std::array<SwapOutcome, 4> swap_outcomes_impl(const DensityMatrix& pair_ac,
                                              const DensityMatrix& pair_db,
                                              bool apply_correction) {
    const Matrix16cd joint = Eigen::kroneckerProduct(pair_ac.rho, pair_db.rho);
    const auto basis = bell_basis();
    const auto corrections = outcome_corrections();

    std::array<SwapOutcome, 4> outcomes{
        SwapOutcome{0.0, bell_density()}, SwapOutcome{0.0, bell_density()},
        SwapOutcome{0.0, bell_density()}, SwapOutcome{0.0, bell_density()}};
    double prob_sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        const Isometry16x4 iso = middle_bra(basis[k]);
        Matrix4cd sigma = iso.adjoint() * joint * iso;
        const double p = sigma.trace().real();
        prob_sum += p;
        if (p > 1e-14) {
            sigma /= p;
        } else {
            sigma = Matrix4cd::Identity() / 4.0;  // unreachable outcome, any valid state
        }
        if (apply_correction) {
            const Matrix4cd fix = Eigen::kroneckerProduct(Matrix2cd::Identity(), corrections[k]);
            sigma = fix * sigma * fix.adjoint();
        }
        const Matrix4cd symmetrized = (sigma + sigma.adjoint()) / 2.0;  // strip numerical asymmetry
        outcomes[k] = SwapOutcome{p, DensityMatrix(symmetrized)};
    }
    if (std::abs(prob_sum - 1.0) > 1e-10) {
        throw std::invalid_argument("bell swap outcome probabilities do not sum to 1");
    }
    return outcomes;
}

double average_concurrence_impl(const LinkState& a, const LinkState& b, bool apply_correction) {
    const auto outcomes = swap_outcomes_impl(link_density(a), link_density(b), apply_correction);
    double avg = 0.0;
    for (const SwapOutcome& o : outcomes) {
        if (o.probability > 1e-14) avg += o.probability * wootters_concurrence(o.post_state);
    }
    return avg;
}

}  // namespace

DensityMatrix::DensityMatrix(const Eigen::Matrix4cd& rho_) : rho(rho_) { validate_density(rho); }

DensityMatrix pure_density(double alpha) {
    PureSchmidtState state(alpha);  // range check
    Vector4cd psi = Vector4cd::Zero();
    psi(0) = state.alpha;
    psi(3) = std::sqrt(std::max(0.0, 1.0 - state.alpha * state.alpha));
    psi.normalize();
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix werner_density(double p) {
    WernerState state(p);
    const Matrix4cd phi = bell_density().rho;
    return DensityMatrix(state.p * phi + (1.0 - state.p) / 4.0 * Matrix4cd::Identity());
}

DensityMatrix bell_density() {
    const double s = 1.0 / std::sqrt(2.0);
    Vector4cd phi;
    phi << s, 0, 0, s;
    return DensityMatrix(phi * phi.adjoint());
}

DensityMatrix link_density(const LinkState& state) {
    return std::visit(
        [](const auto& s) -> DensityMatrix {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PureSchmidtState>) {
                return pure_density(s.alpha);
            } else if constexpr (std::is_same_v<T, WernerState>) {
                return werner_density(s.p);
            } else {
                return bell_density();
            }
        },
        state);
}

double wootters_concurrence(const DensityMatrix& rho) {
    Matrix4cd yy;  // sigma_y (x) sigma_y, real representation
    yy << 0, 0, 0, -1,
          0, 0, 1, 0,
          0, 1, 0, 0,
         -1, 0, 0, 0;
    const Matrix4cd tilde = yy * rho.rho.conjugate() * yy;
    const Matrix4cd root = psd_sqrt(rho.rho);
    const Matrix4cd similar = root * tilde * root;  // Hermitian, same spectrum as rho*tilde

    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(similar, Eigen::EigenvaluesOnly);
    Eigen::Vector4d evs = es.eigenvalues();
    // Mathematically-zero eigenvalues reappear as O(eps^2) noise whose square
    // roots are large enough to bias the difference; clamp relative to the
    // leading eigenvalue before taking roots.
    const double floor = evs.maxCoeff() * 1e-13;
    Eigen::Vector4d lams = (evs.array() < floor).select(0.0, evs).cwiseSqrt();
    std::sort(lams.data(), lams.data() + 4, std::greater<>());
    return std::max(0.0, lams(0) - lams(1) - lams(2) - lams(3));
}

std::array<SwapOutcome, 4> bell_swap_outcomes(const LinkState& a, const LinkState& b,
                                              bool apply_correction) {
    return swap_outcomes_impl(link_density(a), link_density(b), apply_correction);
}

double bell_swap_average_concurrence(const LinkState& a, const LinkState& b) {
    return average_concurrence_impl(a, b, true);
}

double bell_swap_average_concurrence_uncorrected(const LinkState& a, const LinkState& b) {
    return average_concurrence_impl(a, b, false);
}

}  // namespace qbraess::oracle
