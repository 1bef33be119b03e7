#pragma once

// Displaced-frame (polaron-style) analytic ground states: displacement
// conditions for xi1/xi2, coherent-state ansatz vectors, transformed and
// quadratic-approximation energies, and fidelity against exact states.

#include <array>
#include <cmath>
#include <functional>
#include <utility>

#include <Eigen/Dense>

#include "asrm/errors.hpp"
#include "asrm/exact.hpp"
#include "asrm/fock.hpp"
#include "asrm/hamiltonian.hpp"

namespace asrm {

struct TransformedAnsatz {
    CoherentAmplitude xi;
    double energy_transformed;
    double energy_quadratic_approx;
    Eigen::VectorXcd ansatz_state;
    double root_residual;
};

struct ThreeLevelEigensystem {
    double A;
    double B;
    std::array<double, 3> nu;                    // ascending
    std::array<Eigen::Vector3d, 3> phi;          // components on {|1>, |0>, |-1>}
    std::array<double, 3> normalizer;
};

namespace detail {

// Safeguarded Newton root solve inside a sign-changing bracket [lo, hi].
inline double newton_bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0) throw RootNotFound("root solve: no sign change in bracket");
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double fx = f(x);
        if (std::abs(fx) < 1e-14) return x;
        double h = 1e-7 * (1.0 + std::abs(x));
        double dfx = (f(x + h) - f(x - h)) / (2 * h);
        double xn = (dfx != 0.0) ? x - fx / dfx : lo - 1.0;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // bisection fallback
        if ((flo < 0) == (fx < 0))
            lo = x;
        else
            hi = x;
        x = xn;
        if (hi - lo < 1e-16 * (1.0 + std::abs(x))) return 0.5 * (lo + hi);
    }
    return x;
}

// Bracket a root near a guess by symmetric expansion.
inline std::pair<double, double> bracket_near(const std::function<double(double)>& f,
                                              double guess, double step0) {
    double lo = guess - step0, hi = guess + step0;
    for (int it = 0; it < 40; ++it) {
        if (f(lo) * f(hi) <= 0) return {lo, hi};
        lo -= step0;
        hi += step0;
    }
    throw RootNotFound("root solve: bracket expansion failed");
}

// Track the root continuously connected to xi=0 as the couplings scale from
// zero to their target. A jump between consecutive homotopy steps signals a
// fold in the root curve.
template <class ResidualAt>
inline double homotopy_root(ResidualAt&& residual_at, int steps = 50) {
    double xi = 0.0;
    for (int k = 1; k <= steps; ++k) {
        double t = double(k) / steps;
        std::function<double(double)> f = [&](double x) { return residual_at(t, x); };
        auto [lo, hi] = bracket_near(f, xi, 0.05);
        double next = newton_bisect(f, lo, hi);
        if (k > 1 && std::abs(next - xi) > 0.5)
            throw RootAmbiguous("root solve: homotopy step jumped, fold suspected");
        xi = next;
    }
    return xi;
}

}  // namespace detail

/// Residual of the xi1 displacement condition
/// e^{2 xi^2} [(l1+l2) - 4 w_b xi] - (l1-l2) - 4 w_a xi.
inline double xi1_residual(const SingleQubitParams& p, double xi) {
    return std::exp(2 * xi * xi) * ((p.lambda1 + p.lambda2) - 4 * p.w_b * xi) -
           (p.lambda1 - p.lambda2) - 4 * p.w_a * xi;
}

/// xi1 ~ lambda2 / (2 (w_a + w_b)).
inline CoherentAmplitude xi1_linear_approx(const SingleQubitParams& p) {
    return CoherentAmplitude(p.lambda2 / (2 * (p.w_a + p.w_b)));
}

inline CoherentAmplitude solve_xi1(const SingleQubitParams& p) {
    if (p.lambda1 == 0 && p.lambda2 == 0) return CoherentAmplitude(0.0);
    double xi = detail::homotopy_root([&](double t, double x) {
        SingleQubitParams q(p.w_a, p.w_b, t * p.lambda1, t * p.lambda2);
        return xi1_residual(q, x);
    });
    return CoherentAmplitude(xi);
}

/// Transformed single-qubit ground energy
/// E_g1 = xi^2 w_b - (l1+l2) xi / 2 - eta [w_a - xi (l1-l2)] / 2, eta = e^{-2 xi^2}.
inline double energy_g1(const SingleQubitParams& p, const CoherentAmplitude& xi1) {
    double xi = xi1.alpha;
    double eta = std::exp(-2 * xi * xi);
    return xi * xi * p.w_b - 0.5 * (p.lambda1 + p.lambda2) * xi -
           0.5 * eta * (p.w_a - xi * (p.lambda1 - p.lambda2));
}

/// Quadratic-in-coupling approximation of E_g1.
inline double energy_g1_quadratic(const SingleQubitParams& p) {
    double s = p.w_a + p.w_b;
    double l2 = p.lambda2;
    return -0.5 * p.w_a - l2 * l2 / (4 * s) +
           l2 * l2 * l2 * (p.lambda1 - p.lambda2) / (8 * s * s * s);
}

/// Analytic single-qubit ground state (|psi+>|-xi> - |psi->|xi>)/sqrt(2)
/// expressed on the {|up>, |down>} x Fock basis.
inline TransformedAnsatz ansatz_single(const SingleQubitParams& p, const FockSpace& space) {
    CoherentAmplitude xi = solve_xi1(p);
    Eigen::VectorXd minus = coherent_vector(CoherentAmplitude(-xi.alpha), space);
    Eigen::VectorXd plus = coherent_vector(xi, space);

    // |psi+/-> = (|up> +/- |down>)/sqrt(2); expanding gives
    //   up component (|-xi> - |xi>)/2, down component (|-xi> + |xi>)/2.
    Eigen::VectorXd up = 0.5 * (minus - plus);
    Eigen::VectorXd down = 0.5 * (minus + plus);
    Eigen::VectorXcd state(2 * space.dim());
    state << up.cast<Complex>(), down.cast<Complex>();
    state /= state.norm();

    return {xi, energy_g1(p, xi), energy_g1_quadratic(p), std::move(state),
            std::abs(xi1_residual(p, xi.alpha))};
}

/// A and B of the displaced three-level system, eta2 = e^{-xi^2/2}.
inline std::pair<double, double> three_level_ab(const TwoQubitParams& p, double xi) {
    double eta = std::exp(-0.5 * xi * xi);
    double a = p.w_b * xi * xi - 2 * xi * (p.g1 + p.g2);
    double b = (p.w_a * eta - eta * xi * (p.g1 - p.g2)) / std::sqrt(2.0);
    return {a, b};
}

/// Residual of the xi2 condition D1(xi2) = 0 that decouples the lowest two
/// displaced levels.
inline double xi2_residual(const TwoQubitParams& p, double xi) {
    auto [a, b] = three_level_ab(p, xi);
    double eta = std::exp(-0.5 * xi * xi);
    double disc = std::sqrt(a * a + 8 * b * b);
    return eta * (p.w_a * xi + (p.g1 - p.g2)) * (a + disc) -
           2 * std::sqrt(2.0) * b * ((p.g1 + p.g2) - p.w_b * xi);
}

/// xi2 ~ [(w_b - w_a) g1 + (w_b + w_a) g2] / (w_b^2 + w_a^2).
inline CoherentAmplitude xi2_linear_approx(const TwoQubitParams& p) {
    return CoherentAmplitude(((p.w_b - p.w_a) * p.g1 + (p.w_b + p.w_a) * p.g2) /
                             (p.w_b * p.w_b + p.w_a * p.w_a));
}

inline CoherentAmplitude solve_xi2(const TwoQubitParams& p) {
    if (p.g1 == 0 && p.g2 == 0) return CoherentAmplitude(0.0);
    double xi = detail::homotopy_root([&](double t, double x) {
        TwoQubitParams q(p.w_a, p.w_b, t * p.g1, t * p.g2);
        return xi2_residual(q, x);
    });
    return CoherentAmplitude(xi);
}

/// Eigenvalues and eigenvectors of the displaced 3x3 qubit block.
inline ThreeLevelEigensystem three_level_eigensystem(const TwoQubitParams& p,
                                                     const CoherentAmplitude& xi2) {
    auto [a, b] = three_level_ab(p, xi2.alpha);
    if (std::abs(b) < 1e-14)
        throw DegenerateB("three_level_eigensystem: |B| < 1e-14, eigenvectors undefined");
    double disc = std::sqrt(a * a + 8 * b * b);

    ThreeLevelEigensystem sys;
    sys.A = a;
    sys.B = b;
    sys.nu = {0.5 * a - 0.5 * disc, a, 0.5 * a + 0.5 * disc};

    // Components ordered {|1>, |0>, |-1>} to match the operator basis.
    Eigen::Vector3d v1{1.0, -(a + disc) / (2 * b), 1.0};
    Eigen::Vector3d v2{1.0, 0.0, -1.0};
    Eigen::Vector3d v3{1.0, -(a - disc) / (2 * b), 1.0};
    sys.normalizer = {v1.norm(), v2.norm(), v3.norm()};
    sys.phi = {v1 / v1.norm(), v2 / v2.norm(), v3 / v3.norm()};
    return sys;
}

/// Quadratic-in-coupling approximation of E_g2.
inline double energy_g2_quadratic(const TwoQubitParams& p) {
    return -p.w_a - (p.g1 + p.g2) * p.g2 / (p.w_a * p.w_b);
}

/// Transformed two-qubit ground energy nu1 at the solved displacement.
inline double energy_g2(const TwoQubitParams& p) {
    CoherentAmplitude xi = solve_xi2(p);
    auto [a, b] = three_level_ab(p, xi.alpha);
    return 0.5 * a - 0.5 * std::sqrt(a * a + 8 * b * b);
}

/// Analytic two-qubit ground state in the rotated frame:
/// (|-1>|xi2> - (nu3/B)|0>|0> + |1>|-xi2>) / N1 on {|1>, |0>, |-1>} x Fock.
inline TransformedAnsatz ansatz_two_qubit(const TwoQubitParams& p, const FockSpace& space) {
    CoherentAmplitude xi = solve_xi2(p);
    ThreeLevelEigensystem sys = three_level_eigensystem(p, xi);
    double beta = -sys.nu[2] / sys.B;  // equals the |0> coefficient of phi1

    Eigen::VectorXd c_plus = coherent_vector(xi, space);
    Eigen::VectorXd c_minus = coherent_vector(CoherentAmplitude(-xi.alpha), space);
    Eigen::VectorXd c_zero = coherent_vector(CoherentAmplitude(0.0), space);

    const int d = space.dim();
    Eigen::VectorXcd state(3 * d);
    state.segment(0, d) = c_minus.cast<Complex>();             // |1> block
    state.segment(d, d) = (beta * c_zero).cast<Complex>();     // |0> block
    state.segment(2 * d, d) = c_plus.cast<Complex>();          // |-1> block
    state /= state.norm();

    return {xi, sys.nu[0], energy_g2_quadratic(p), std::move(state),
            std::abs(xi2_residual(p, xi.alpha))};
}

/// |<a|b>| with a gauge-independent modulus.
inline double fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    if (a.size() != b.size()) throw DimensionMismatch("fidelity: vectors differ in dimension");
    return std::abs(a.dot(b));
}

}  // namespace asrm
