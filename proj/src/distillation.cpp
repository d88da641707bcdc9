#include "qbraess/distillation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qbraess/concurrence.hpp"

namespace qbraess {

DistillTransform::DistillTransform(double source_alpha_, int source_copies_, int target_copies_)
    : source_alpha(source_alpha_), source_copies(source_copies_), target_copies(target_copies_) {
    PureSchmidtState check(source_alpha);  // range check
    if (source_copies < 1) {
        throw std::domain_error("distillation: source copy count must be >= 1");
    }
    if (target_copies < 1 || target_copies > source_copies) {
        throw std::domain_error("distillation: target copies must satisfy 1 <= m <= n, got m = " +
                                std::to_string(target_copies) + ", n = " +
                                std::to_string(source_copies));
    }
}

SchmidtSpectrum tensor_spectrum(double alpha_sq, int n) {
    if (!(alpha_sq >= 0.5 - 1e-12 && alpha_sq <= 1.0 + 1e-12)) {
        throw std::domain_error("tensor_spectrum: alpha_sq out of range [1/2, 1]");
    }
    if (n < 1) {
        throw std::domain_error("tensor_spectrum: copy count must be >= 1");
    }
    if (n > kSpectrumCopyCap) {
        throw std::length_error("tensor_spectrum: copy count " + std::to_string(n) +
                                " exceeds cap " + std::to_string(kSpectrumCopyCap));
    }

    const double a2 = std::min(alpha_sq, 1.0);
    const double b2 = 1.0 - a2;

    SchmidtSpectrum spec;
    spec.weights.reserve(std::size_t{1} << n);
    // a2 >= 1/2, so weights decrease as k decreases; emitted already sorted.
    double binom = 1.0;
    for (int k = n; k >= 0; --k) {
        const double w = std::pow(a2, k) * std::pow(b2, n - k);
        const long long mult = std::llround(binom);
        for (long long i = 0; i < mult; ++i) spec.weights.push_back(w);
        binom = binom * k / (n - k + 1);  // C(n, k-1) from C(n, k)
    }
    std::sort(spec.weights.begin(), spec.weights.end(), std::greater<>());
    return spec;
}

double distilled_alpha_sq(double source_alpha, int n, int m) {
    DistillTransform t(source_alpha, n, m);
    const double a2 = t.source_alpha * t.source_alpha;
    return std::max(0.5, std::pow(a2, static_cast<double>(n) / static_cast<double>(m)));
}

double distilled_alpha(double source_alpha, int n, int m) {
    return std::sqrt(distilled_alpha_sq(source_alpha, n, m));
}

double distilled_concurrence(double source_alpha, int n, int m) {
    return concurrence_from_schmidt_sq(distilled_alpha_sq(source_alpha, n, m));
}

bool majorization_feasible(const SchmidtSpectrum& source, const SchmidtSpectrum& target) {
    const std::size_t len = std::max(source.weights.size(), target.weights.size());
    double src_prefix = 0.0;
    double tgt_prefix = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        src_prefix += k < source.weights.size() ? source.weights[k] : 0.0;
        tgt_prefix += k < target.weights.size() ? target.weights[k] : 0.0;
        if (tgt_prefix < src_prefix - 1e-10) return false;
    }
    return true;
}

}  // namespace qbraess
