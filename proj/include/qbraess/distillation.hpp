#pragma once

#include <vector>

// Deterministic LOCC distillation arithmetic for copies of a two-qubit pure
// state. n copies of a|00>+sqrt(1-a^2)|11> convert deterministically into m
// copies of a'|00>+sqrt(1-a'^2)|11> with
//
//     a'^2 = max(1/2, (a^2)^(n/m)),
//
// the Bell branch (a'^2 = 1/2) being reached whenever (a^2)^(n/m) <= 1/2.
// A brute-force majorization checker over the full tensor-power Schmidt
// spectra guards the closed form.

namespace qbraess {

/// Largest admissible copy count for spectrum expansion (2^n weights).
inline constexpr int kSpectrumCopyCap = 20;

struct DistillTransform {
    double source_alpha;  // larger Schmidt coefficient of the source copies
    int source_copies;    // n >= 1
    int target_copies;    // m, 1 <= m <= n

    DistillTransform(double source_alpha_, int source_copies_, int target_copies_);
};

/// Schmidt weights (squared coefficients), sorted descending, summing to 1.
struct SchmidtSpectrum {
    std::vector<double> weights;
};

/// Schmidt weights of |psi>^(x)n given the squared larger coefficient:
/// the 2^n products a2^k*(1-a2)^(n-k), each with multiplicity C(n,k).
SchmidtSpectrum tensor_spectrum(double alpha_sq, int n);

/// Larger Schmidt coefficient after distilling n copies into m <= n copies.
double distilled_alpha(double source_alpha, int n, int m);

/// Squared form of distilled_alpha; exactly 0.5 on the Bell branch.
double distilled_alpha_sq(double source_alpha, int n, int m);

/// Concurrence of one distilled copy; exactly 1 on the Bell branch.
double distilled_concurrence(double source_alpha, int n, int m);

/// Nielsen's criterion: a deterministic LOCC transform source -> target
/// exists iff every prefix sum of the sorted target weights dominates the
/// corresponding prefix sum of the source weights. Spectra of different
/// lengths are zero-padded.
bool majorization_feasible(const SchmidtSpectrum& source, const SchmidtSpectrum& target);

}  // namespace qbraess
