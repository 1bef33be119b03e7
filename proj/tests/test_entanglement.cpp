#include <doctest.h>

#include <cmath>
#include <complex>

#include "asrm/entanglement.hpp"
#include "asrm/exact.hpp"
#include "asrm/transform.hpp"

using namespace asrm;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

DensityMatrix pure_density(const Eigen::VectorXcd& psi) {
    return DensityMatrix{psi * psi.adjoint()};
}

// Negativity from an arbitrary partially transposed 4x4 matrix (already PT'd).
double negative_part(const Eigen::MatrixXcd& pt) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
    double neg = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) < 0) neg -= es.eigenvalues()(i);
    return neg;
}

}  // namespace

TEST_CASE("reduced density of a product state is pure") {
    // |up> x (|0> + |1>)/sqrt(2) on a 2 x 3 product basis
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(6);
    psi(0) = kInvSqrt2;
    psi(1) = kInvSqrt2;
    DensityMatrix rho = reduced_density(psi, Subsystem::spin, 2, 3);
    rho.validate();
    CHECK(std::abs(rho.matrix(0, 0).real() - 1.0) < 1e-14);
    CHECK(von_neumann_entropy(rho) == doctest::Approx(0.0));

    DensityMatrix osc = reduced_density(psi, Subsystem::oscillator, 2, 3);
    osc.validate();
    CHECK(von_neumann_entropy(osc) == doctest::Approx(0.0));
    CHECK(osc.matrix(0, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("reduced density of a Schmidt pair is maximally mixed") {
    // (|up>|0> + |down>|1>)/sqrt(2)
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi(0) = kInvSqrt2;
    psi(3) = kInvSqrt2;
    DensityMatrix rho = reduced_density(psi, Subsystem::spin, 2, 2);
    CHECK((rho.matrix - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(von_neumann_entropy(rho) == doctest::Approx(1.0));
}

TEST_CASE("reduced density basis mismatch") {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(5);
    psi(0) = 1.0;
    CHECK_THROWS_AS(reduced_density(psi, Subsystem::spin, 2, 3), BasisMismatch);
}

TEST_CASE("spin and oscillator reductions share a spectrum for pure states") {
    GroundStateSolution sol = converged_ground_state(SingleQubitParams(1.0, 1.0, 0.6, 0.6));
    int d = sol.n_max_used + 1;
    DensityMatrix spin = reduced_density(sol.state, Subsystem::spin, 2, d);
    DensityMatrix osc = reduced_density(sol.state, Subsystem::oscillator, 2, d);
    CHECK(von_neumann_entropy(spin) == doctest::Approx(von_neumann_entropy(osc)).epsilon(1e-9));
    CHECK(von_neumann_entropy(spin) > 0.01);  // genuinely entangled at this coupling
}

TEST_CASE("entropy of the maximally mixed two-qubit state is 2") {
    DensityMatrix rho{0.25 * Eigen::MatrixXcd::Identity(4, 4)};
    CHECK(von_neumann_entropy(rho) == doctest::Approx(2.0));
}

TEST_CASE("triplet embedding places the components and keeps the norm") {
    int d = 3;
    Eigen::VectorXcd s = Eigen::VectorXcd::Zero(3 * d);
    s(0) = 0.5;              // |1>|0>
    s(d) = kInvSqrt2;        // |0>|0>
    s(2 * d + 1) = 0.5;      // |-1>|1>
    Eigen::VectorXcd full = triplet_to_two_qubit(s, d);
    CHECK(full.size() == 4 * d);
    CHECK(std::abs(full(0) - Complex(0.5)) < 1e-15);                    // |uu>|0>
    CHECK(std::abs(full(d) - Complex(0.5)) < 1e-15);                    // |ud>|0>
    CHECK(std::abs(full(2 * d) - Complex(0.5)) < 1e-15);                // |du>|0>
    CHECK(std::abs(full(3 * d + 1) - Complex(0.5)) < 1e-15);            // |dd>|1>
    CHECK(full.norm() == doctest::Approx(s.norm()).epsilon(1e-14));

    CHECK_THROWS_AS(triplet_to_two_qubit(s, d + 1), BasisMismatch);
}

TEST_CASE("partial transpose is a trace-preserving involution") {
    Eigen::MatrixXcd rho(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho(i, j) = Complex(0.1 * i + 0.01 * j, 0.02 * (i - j));
    rho = 0.5 * (rho + rho.adjoint().eval());
    Eigen::MatrixXcd pt = partial_transpose_qubit2(rho);
    CHECK(std::abs(pt.trace() - rho.trace()) < 1e-15);
    CHECK((partial_transpose_qubit2(pt) - rho).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(partial_transpose_qubit2(Eigen::MatrixXcd::Identity(3, 3)),
                    DimensionMismatch);
}

TEST_CASE("negativity of separable and Bell states") {
    Eigen::VectorXcd product = Eigen::VectorXcd::Zero(4);
    product(1) = 1.0;  // |ud>
    CHECK(negativity(pure_density(product)) == 0.0);

    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell(0) = kInvSqrt2;
    bell(3) = kInvSqrt2;
    CHECK(negativity(pure_density(bell)) == doctest::Approx(0.5));

    DensityMatrix mixed{0.25 * Eigen::MatrixXcd::Identity(4, 4)};
    CHECK(negativity(mixed) == 0.0);
}

TEST_CASE("negativity rejects non-density input") {
    DensityMatrix not_norm{Eigen::MatrixXcd::Identity(4, 4)};
    CHECK_THROWS_AS(negativity(not_norm), NotDensityMatrix);
    DensityMatrix not_square{Eigen::MatrixXcd::Zero(4, 3)};
    CHECK_THROWS_AS(not_square.validate(), NotDensityMatrix);
    DensityMatrix wrong_dim{Eigen::MatrixXcd::Identity(3, 3) / 3.0};
    CHECK_THROWS_AS(negativity(wrong_dim), NotDensityMatrix);
}

TEST_CASE("negativity is invariant under local unitaries") {
    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell(0) = 0.8;
    bell(3) = 0.6;
    DensityMatrix rho = pure_density(bell);

    Eigen::Matrix2cd u1, u2;
    u1 << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;  // Hadamard
    u2 << std::cos(0.4), Complex(0, -std::sin(0.4)), Complex(0, -std::sin(0.4)), std::cos(0.4);
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) u.block<2, 2>(2 * i, 2 * j) = u1(i, j) * u2;

    DensityMatrix rotated{u * rho.matrix * u.adjoint()};
    CHECK(negativity(rotated) == doctest::Approx(negativity(rho)).epsilon(1e-9));
}

TEST_CASE("triplet-state negativity at zero displacement") {
    // (|1> - sqrt(2)|0> + |-1>)/2 with vacuum oscillator: the displaced ground
    // state at zero coupling. Its two-qubit reduction is separable.
    int d = 4;
    Eigen::VectorXcd s = Eigen::VectorXcd::Zero(3 * d);
    s(0) = 0.5;
    s(d) = -kInvSqrt2;
    s(2 * d) = 0.5;
    CHECK(negativity_of_triplet_state(s, d) == 0.0);

    // |0> component alone embeds to a Bell-type pair.
    Eigen::VectorXcd t = Eigen::VectorXcd::Zero(3 * d);
    t(d) = 1.0;
    CHECK(negativity_of_triplet_state(t, d) == doctest::Approx(0.5));
}

TEST_CASE("explicit partially transposed matrix against the full pipeline") {
    // Build the displaced ansatz directly and compare its reduced negativity
    // with the closed 4x4 matrix over a grid of couplings.
    for (double g1 : {0.1, 0.3, 0.6})
        for (double g2 : {0.05, 0.2, 0.4}) {
            TwoQubitParams p(1.0, 1.0, g1, g2);
            CoherentAmplitude xi = solve_xi2(p);
            ThreeLevelEigensystem sys = three_level_eigensystem(p, xi);
            double beta = -sys.nu[2] / sys.B;

            FockSpace space(40);
            TransformedAnsatz a = ansatz_two_qubit(p, space);
            double via_pipeline = negativity_of_triplet_state(a.ansatz_state, space.dim());

            Eigen::Matrix4d m = transformed_partial_transpose(xi, beta);
            CHECK(std::abs(m.trace() - 1.0) < 1e-14);
            CHECK(std::abs(negative_part(m.cast<Complex>()) - via_pipeline) < 1e-10);
        }
}

TEST_CASE("closed-form negativity matches the eigenvalue computation") {
    // beta in [-sqrt(2), 0] and xi in [0, 1] covers the states the ansatz
    // actually produces (beta = -sqrt(2) at zero coupling).
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            double xi = i / 20.0;
            double beta = -std::sqrt(2.0) * j / 20.0;
            double closed = negativity_closed_form(CoherentAmplitude(xi), beta);
            double eig = negative_part(
                transformed_partial_transpose(CoherentAmplitude(xi), beta).cast<Complex>());
            CHECK(std::abs(closed - eig) < 1e-12);
        }

    // zero coupling: xi = 0, beta = -sqrt(2) gives exactly zero
    CHECK(negativity_closed_form(CoherentAmplitude(0.0), -std::sqrt(2.0)) == 0.0);
}

TEST_CASE("perturbative negativity") {
    CHECK(negativity_perturbative(TwoQubitParams(1.0, 1.0, 0.4, 0.0)) == 0.0);
    CHECK(negativity_perturbative(TwoQubitParams(1.0, 1.0, 0.25, 0.25)) ==
          doctest::Approx(4.2414e-3).epsilon(1e-4));

    // Same leading power: the ratio against the closed form stays bounded as
    // the couplings shrink (they differ by an O(1) prefactor, not by order).
    for (double g : {0.05, 0.1, 0.2}) {
        TwoQubitParams p(1.0, 1.0, g, g);
        CoherentAmplitude xi = solve_xi2(p);
        ThreeLevelEigensystem sys = three_level_eigensystem(p, xi);
        double closed = negativity_closed_form(xi, -sys.nu[2] / sys.B);
        double pert = negativity_perturbative(p);
        CHECK(pert > 0.05 * closed);
        CHECK(pert < 1.0 * closed + 1e-12);
    }
}

TEST_CASE("exact two-qubit ground state entanglement endpoints") {
    // decoupled: product ground state, no entropy, no negativity
    GroundStateSolution free = converged_ground_state(TwoQubitParams(1.0, 1.0, 0.0, 0.0));
    int d = free.n_max_used + 1;
    Eigen::VectorXcd full = triplet_to_two_qubit(free.state, d);
    DensityMatrix rho = reduced_density(full, Subsystem::spin, 4, d);
    CHECK(von_neumann_entropy(rho) < 1e-10);
    CHECK(negativity(rho) == 0.0);

    // coupled: both measures strictly positive
    GroundStateSolution sol = converged_ground_state(TwoQubitParams(1.0, 1.0, 0.5, 0.1));
    d = sol.n_max_used + 1;
    full = triplet_to_two_qubit(sol.state, d);
    rho = reduced_density(full, Subsystem::spin, 4, d);
    CHECK(von_neumann_entropy(rho) > 0.01);
    CHECK(negativity(rho) > 1e-3);
}
