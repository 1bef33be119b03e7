#pragma once

// Ground-state extraction by dense Hermitian eigendecomposition, with
// automatic Fock-truncation convergence.

#include <optional>
#include <utility>
#include <variant>

#include <Eigen/Dense>

#include "asrm/errors.hpp"
#include "asrm/hamiltonian.hpp"

namespace asrm {

enum class Frame { original, rotated };

struct GroundStateSolution {
    double energy;
    Eigen::VectorXcd state;
    int n_max_used;
    double energy_convergence;  // |E(n) - E(n - step)|
};

namespace detail {

// Deterministic gauge: the largest-magnitude component is made real positive.
inline void fix_phase(Eigen::VectorXcd& v) {
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    Complex c = v(imax);
    v *= std::conj(c) / std::abs(c);
}

}  // namespace detail

/// Lowest eigenvalue and unit eigenvector of a Hermitian operator.
/// Throws DegenerateGround when the two lowest eigenvalues differ by < 1e-10.
inline std::pair<double, Eigen::VectorXcd> ground_state(const HermitianOperator& h) {
    if (h.hermiticity_residual() > 1e-12) throw Error("ground_state: input not Hermitian");

    double e0, e1;
    Eigen::VectorXcd v;
    if (h.is_real()) {
        // Real symmetric path; noticeably faster for sweep workloads.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.matrix.real());
        e0 = es.eigenvalues()(0);
        e1 = es.eigenvalues()(1);
        v = es.eigenvectors().col(0).cast<Complex>();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix);
        e0 = es.eigenvalues()(0);
        e1 = es.eigenvalues()(1);
        v = es.eigenvectors().col(0);
    }
    if (e1 - e0 < 1e-10)
        throw DegenerateGround("ground_state: two lowest eigenvalues differ by < 1e-10");
    detail::fix_phase(v);
    return {e0, std::move(v)};
}

struct ConvergenceSettings {
    double tol = 1e-8;
    int n_start = 20;
    int n_step = 10;
    int n_cap = 200;
};

namespace detail {

template <class BuildFn>
inline GroundStateSolution converge(BuildFn&& build, const ConvergenceSettings& cs) {
    if (cs.tol <= 0) throw Error("converged_ground_state: tol must be > 0");
    if (cs.n_start < 8) throw Error("converged_ground_state: n_start must be >= 8");

    auto [e_prev, v_prev] = ground_state(build(FockSpace(cs.n_start)));
    for (int n = cs.n_start + cs.n_step; n <= cs.n_cap; n += cs.n_step) {
        auto [e, v] = ground_state(build(FockSpace(n)));
        double gap = std::abs(e - e_prev);
        if (gap < cs.tol) return {e, std::move(v), n, gap};
        e_prev = e;
        v_prev = std::move(v);
    }
    throw NoConvergence("converged_ground_state: n_cap reached before energies settled");
}

}  // namespace detail

inline GroundStateSolution converged_ground_state(const SingleQubitParams& p,
                                                  const ConvergenceSettings& cs = {}) {
    return detail::converge([&](const FockSpace& s) { return build_single_qubit(p, s); }, cs);
}

inline GroundStateSolution converged_ground_state(const TwoQubitParams& p,
                                                  Frame frame = Frame::original,
                                                  const ConvergenceSettings& cs = {}) {
    return detail::converge(
        [&](const FockSpace& s) {
            return frame == Frame::original ? build_two_qubit(p, s)
                                            : build_two_qubit_rotated(p, s);
        },
        cs);
}

}  // namespace asrm
