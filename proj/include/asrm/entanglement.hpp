#pragma once

// Entanglement diagnostics: partial traces, von Neumann entropy, the
// triplet -> two-qubit embedding, negativity from the partial transpose, and
// the closed-form / perturbative negativity of the displaced ansatz.

#include <cmath>

#include <Eigen/Dense>

#include "asrm/errors.hpp"
#include "asrm/fock.hpp"
#include "asrm/hamiltonian.hpp"

namespace asrm {

enum class Subsystem { spin, oscillator };

struct DensityMatrix {
    Eigen::MatrixXcd matrix;

    int dim() const { return int(matrix.rows()); }

    void validate() const {
        if (matrix.rows() != matrix.cols()) throw NotDensityMatrix("density matrix not square");
        if (std::abs(matrix.trace().real() - 1.0) > 1e-10 ||
            std::abs(matrix.trace().imag()) > 1e-10)
            throw NotDensityMatrix("density matrix trace != 1");
        if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
            throw NotDensityMatrix("density matrix not Hermitian");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix);
        if (es.eigenvalues()(0) < -1e-8)
            throw NotDensityMatrix("density matrix has a negative eigenvalue");
    }
};

/// Partial trace of a pure state on a (spin x Fock) product basis, keeping the
/// requested subsystem. Basis ordering is spin-major, Fock-minor.
inline DensityMatrix reduced_density(const Eigen::VectorXcd& state, Subsystem keep, int spin_dim,
                                     int fock_dim) {
    if (state.size() != Eigen::Index(spin_dim) * fock_dim)
        throw BasisMismatch("reduced_density: state length does not match spin_dim * fock_dim");
    // Rows index spin, columns index Fock.
    Eigen::MatrixXcd psi =
        Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
            state.data(), spin_dim, fock_dim);
    Eigen::MatrixXcd rho;
    if (keep == Subsystem::spin)
        rho = psi * psi.adjoint();
    else
        rho = psi.transpose() * psi.conjugate();
    return {std::move(rho)};
}

/// -sum p log2 p over the eigenvalues; tiny negative eigenvalues from
/// numerical noise are clamped to zero.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double p = es.eigenvalues()(i);
        if (p < 1e-14) continue;
        s -= p * std::log2(p);
    }
    return s;
}

/// Embed a triplet x Fock state into the full two-qubit x Fock space:
/// |1> -> |uu>, |0> -> (|ud> + |du>)/sqrt(2), |-1> -> |dd>.
/// Two-qubit basis order {|uu>, |ud>, |du>, |dd>}, Fock-minor.
inline Eigen::VectorXcd triplet_to_two_qubit(const Eigen::VectorXcd& state, int fock_dim) {
    if (state.size() != 3 * Eigen::Index(fock_dim))
        throw BasisMismatch("triplet_to_two_qubit: state length does not match 3 * fock_dim");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd out(4 * fock_dim);
    out.segment(0, fock_dim) = state.segment(0, fock_dim);
    out.segment(fock_dim, fock_dim) = inv_sqrt2 * state.segment(fock_dim, fock_dim);
    out.segment(2 * fock_dim, fock_dim) = inv_sqrt2 * state.segment(fock_dim, fock_dim);
    out.segment(3 * fock_dim, fock_dim) = state.segment(2 * fock_dim, fock_dim);
    return out;
}

/// Partial transpose on the second qubit of a 4x4 two-qubit matrix.
inline Eigen::MatrixXcd partial_transpose_qubit2(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw DimensionMismatch("partial_transpose_qubit2: expected a 4x4 matrix");
    Eigen::MatrixXcd rt(4, 4);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j2 = 0; j2 < 2; ++j2)
                    rt(i1 * 2 + j2, j1 * 2 + i2) = rho(i1 * 2 + i2, j1 * 2 + j2);
    return rt;
}

/// Negativity |sum of negative eigenvalues of the partial transpose|.
inline double negativity(const DensityMatrix& rho) {
    rho.validate();
    if (rho.dim() != 4) throw NotDensityMatrix("negativity: expected a two-qubit density matrix");
    Eigen::MatrixXcd rt = partial_transpose_qubit2(rho.matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rt, Eigen::EigenvaluesOnly);
    double neg = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev < 0) neg -= ev;
    }
    return neg < 1e-12 ? 0.0 : neg;
}

/// Negativity of a triplet-sector pure state: embed, trace out the oscillator,
/// partially transpose.
inline double negativity_of_triplet_state(const Eigen::VectorXcd& state, int fock_dim) {
    Eigen::VectorXcd full = triplet_to_two_qubit(state, fock_dim);
    DensityMatrix rho = reduced_density(full, Subsystem::spin, 4, fock_dim);
    return negativity(rho);
}

/// Partially transposed reduced two-qubit density matrix of the displaced
/// ansatz, as an explicit 4x4 matrix in the basis {|uu>, |ud>, |du>, |dd>}.
/// alpha is the displacement, beta = -nu3/B.
inline Eigen::Matrix4d transformed_partial_transpose(const CoherentAmplitude& xi2, double beta) {
    double a2 = xi2.alpha * xi2.alpha;
    double off = beta / std::sqrt(2.0) * std::exp(-0.5 * a2);
    double mid = std::exp(-2.0 * a2);
    double bb2 = 0.5 * beta * beta;
    Eigen::Matrix4d m;
    m << 1.0, off, off, bb2,
         off, bb2, mid, off,
         off, mid, bb2, off,
         bb2, off, off, 1.0;
    return m / (2.0 + beta * beta);
}

/// Closed-form negativity max{(2 e^{-2 xi^2} - beta^2) / (2 (2 + beta^2)), 0}.
inline double negativity_closed_form(const CoherentAmplitude& xi2, double beta) {
    double num = 2.0 * std::exp(-2.0 * xi2.alpha * xi2.alpha) - beta * beta;
    return std::max(num / (2.0 * (2.0 + beta * beta)), 0.0);
}

/// Perturbative negativity w_b [(1 - 1/sqrt(2))^2 g2^2 + g1 g2] / (4 w_a (w_a + w_b)^2).
inline double negativity_perturbative(const TwoQubitParams& p) {
    double c = 1.0 - 1.0 / std::sqrt(2.0);
    double s = p.w_a + p.w_b;
    return p.w_b * (c * c * p.g2 * p.g2 + p.g1 * p.g2) / (4 * p.w_a * s * s);
}

}  // namespace asrm
