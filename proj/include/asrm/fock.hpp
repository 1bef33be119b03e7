#pragma once

// Truncated bosonic Fock-space primitives: ladder operators, coherent-state
// vectors and their exact Gaussian overlaps.

#include <cmath>
#include <cstddef>

#include <Eigen/Dense>

#include "asrm/errors.hpp"

namespace asrm {

/// Truncated oscillator Hilbert space keeping photon numbers 0..n_max.
struct FockSpace {
    int n_max;

    explicit FockSpace(int n_max_) : n_max(n_max_) {
        if (n_max < 1) throw Error("FockSpace: n_max must be >= 1");
    }

    int dim() const { return n_max + 1; }
};

/// Real, dimensionless displacement labelling a coherent state.
struct CoherentAmplitude {
    double alpha;

    explicit CoherentAmplitude(double a) : alpha(a) {
        if (!std::isfinite(a) || std::abs(a) > 10.0)
            throw Error("CoherentAmplitude: |alpha| must be finite and <= 10");
    }
};

/// Matrix of the annihilation operator b: M[n-1, n] = sqrt(n).
inline Eigen::MatrixXd annihilation_matrix(const FockSpace& space) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(space.dim(), space.dim());
    for (int n = 1; n <= space.n_max; ++n) m(n - 1, n) = std::sqrt(double(n));
    return m;
}

/// Poissonian tail mass bound e^{-a^2} a^{2 n_max} / n_max! for the dropped
/// components of |alpha> beyond the cutoff, evaluated in log space.
inline double coherent_tail_bound(double alpha, int n_max) {
    if (alpha == 0.0) return 0.0;
    double log_tail = -alpha * alpha + 2.0 * n_max * std::log(std::abs(alpha)) -
                      std::lgamma(double(n_max) + 1.0);
    return std::exp(log_tail);
}

/// Truncated coherent state, renormalized to unit norm. Refuses to truncate
/// when the tail mass bound exceeds 1e-12.
inline Eigen::VectorXd coherent_vector(const CoherentAmplitude& alpha, const FockSpace& space) {
    if (coherent_tail_bound(alpha.alpha, space.n_max) >= 1e-12)
        throw TruncationInsufficient("coherent_vector: tail mass bound >= 1e-12 at alpha=" +
                                     std::to_string(alpha.alpha) +
                                     ", n_max=" + std::to_string(space.n_max));
    Eigen::VectorXd v(space.dim());
    v(0) = 1.0;
    for (int n = 1; n <= space.n_max; ++n) v(n) = v(n - 1) * alpha.alpha / std::sqrt(double(n));
    v /= v.norm();
    return v;
}

/// Closed-form overlap <alpha|beta> = exp(-(alpha-beta)^2/2) for real amplitudes.
inline double coherent_overlap(const CoherentAmplitude& alpha, const CoherentAmplitude& beta) {
    double d = alpha.alpha - beta.alpha;
    return std::exp(-0.5 * d * d);
}

}  // namespace asrm
