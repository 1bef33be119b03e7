#pragma once

// Dense Hermitian Hamiltonians for the single- and two-qubit asymmetric Rabi
// models on (spin x Fock) tensor bases.
//
// Basis ordering is spin-major, Fock-minor throughout:
//   single qubit: {|up>, |down>} x {|0>..|n_max>}, sigma_z|up> = +|up>
//   two qubits (triplet sector): {|1>, |0>, |-1>} x {|0>..|n_max>}

#include <complex>

#include <Eigen/Dense>

#include "asrm/errors.hpp"
#include "asrm/fock.hpp"

namespace asrm {

using Complex = std::complex<double>;

struct SingleQubitParams {
    double w_a;      // qubit frequency
    double w_b;      // oscillator frequency
    double lambda1;  // corotating coupling
    double lambda2;  // counterrotating coupling

    SingleQubitParams(double wa, double wb, double l1, double l2)
        : w_a(wa), w_b(wb), lambda1(l1), lambda2(l2) {
        if (wa <= 0 || wb <= 0 || l1 < 0 || l2 < 0)
            throw Error("SingleQubitParams: need w_a, w_b > 0 and lambda1, lambda2 >= 0");
    }
};

struct TwoQubitParams {
    double w_a;  // per-qubit frequency
    double w_b;  // oscillator frequency
    double g1;   // corotating coupling
    double g2;   // counterrotating coupling

    TwoQubitParams(double wa, double wb, double g1_, double g2_)
        : w_a(wa), w_b(wb), g1(g1_), g2(g2_) {
        if (wa <= 0 || wb <= 0 || g1 < 0 || g2 < 0)
            throw Error("TwoQubitParams: need w_a, w_b > 0 and g1, g2 >= 0");
    }
};

/// Dense Hermitian operator together with its tensor-basis layout.
struct HermitianOperator {
    Eigen::MatrixXcd matrix;
    int spin_dim;  // 2 (qubit) or 3 (triplet)
    int fock_dim;  // n_max + 1

    int dim() const { return spin_dim * fock_dim; }

    double hermiticity_residual() const {
        return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    }

    bool is_real() const { return matrix.imag().cwiseAbs().maxCoeff() < 1e-15; }
};

namespace detail {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Spin-1 ladder operator J+ on {|1>, |0>, |-1>}: J+|m> = sqrt(2 - m(m+1))|m+1>.
inline Eigen::MatrixXcd spin1_raising() {
    Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(3, 3);
    jp(0, 1) = std::sqrt(2.0);
    jp(1, 2) = std::sqrt(2.0);
    return jp;
}

}  // namespace detail

/// H1 = w_a/2 sigma_z + w_b b†b + lambda1/2 (b†s- + b s+) + lambda2/2 (b†s+ + b s-).
inline HermitianOperator build_single_qubit(const SingleQubitParams& p, const FockSpace& space) {
    const int d = space.dim();
    Eigen::MatrixXcd a = annihilation_matrix(space).cast<Complex>();
    Eigen::MatrixXcd ad = a.adjoint();
    Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);

    Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(2, 2);
    sp(0, 1) = 1.0;  // sigma_+ |down> = |up>
    Eigen::MatrixXcd sm = sp.adjoint();

    Eigen::MatrixXcd h = 0.5 * p.w_a * detail::kron(sz, id) +
                         p.w_b * detail::kron(i2, ad * a) +
                         0.5 * p.lambda1 * (detail::kron(sm, ad) + detail::kron(sp, a)) +
                         0.5 * p.lambda2 * (detail::kron(sp, ad) + detail::kron(sm, a));
    return {std::move(h), 2, d};
}

/// H = w_a Jz + w_b b†b + g1 (b†J- + bJ+) + g2 (b†J+ + bJ-) in the triplet sector.
inline HermitianOperator build_two_qubit(const TwoQubitParams& p, const FockSpace& space) {
    const int d = space.dim();
    Eigen::MatrixXcd a = annihilation_matrix(space).cast<Complex>();
    Eigen::MatrixXcd ad = a.adjoint();
    Eigen::MatrixXcd i3 = Eigen::MatrixXcd::Identity(3, 3);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);

    Eigen::MatrixXcd jp = detail::spin1_raising();
    Eigen::MatrixXcd jm = jp.adjoint();
    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(3, 3);
    jz(0, 0) = 1.0;
    jz(2, 2) = -1.0;

    Eigen::MatrixXcd h = p.w_a * detail::kron(jz, id) + p.w_b * detail::kron(i3, ad * a) +
                         p.g1 * (detail::kron(jm, ad) + detail::kron(jp, a)) +
                         p.g2 * (detail::kron(jp, ad) + detail::kron(jm, a));
    return {std::move(h), 3, d};
}

/// y-rotated form H2 = w_a Jx + w_b b†b + (g1+g2)(b†+b)Jz + i(g1-g2)(b†-b)Jy.
/// Complex-valued whenever g1 != g2.
inline HermitianOperator build_two_qubit_rotated(const TwoQubitParams& p, const FockSpace& space) {
    const int d = space.dim();
    Eigen::MatrixXcd a = annihilation_matrix(space).cast<Complex>();
    Eigen::MatrixXcd ad = a.adjoint();
    Eigen::MatrixXcd i3 = Eigen::MatrixXcd::Identity(3, 3);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);

    Eigen::MatrixXcd jp = detail::spin1_raising();
    Eigen::MatrixXcd jm = jp.adjoint();
    Eigen::MatrixXcd jx = 0.5 * (jp + jm);
    Eigen::MatrixXcd jy = Complex(0, -0.5) * (jp - jm);
    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(3, 3);
    jz(0, 0) = 1.0;
    jz(2, 2) = -1.0;

    Eigen::MatrixXcd h = p.w_a * detail::kron(jx, id) + p.w_b * detail::kron(i3, ad * a) +
                         (p.g1 + p.g2) * detail::kron(jz, ad + a) +
                         Complex(0, 1) * (p.g1 - p.g2) * detail::kron(jy, ad - a);
    return {std::move(h), 3, d};
}

}  // namespace asrm
