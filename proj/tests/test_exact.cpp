#include <doctest.h>

#include <cmath>

#include "asrm/exact.hpp"

using namespace asrm;

TEST_CASE("ground state of a diagonal matrix") {
    HermitianOperator h;
    h.matrix = Eigen::Vector3cd(-1.0, 0.0, 2.0).asDiagonal();
    h.spin_dim = 1;
    h.fock_dim = 3;
    auto [e, v] = ground_state(h);
    CHECK(e == doctest::Approx(-1.0));
    CHECK(std::abs(v(0)) == doctest::Approx(1.0));
    CHECK(v(0).real() > 0);  // deterministic gauge
}

TEST_CASE("decoupled single qubit ground state") {
    auto [e, v] = ground_state(build_single_qubit(SingleQubitParams(1.0, 1.0, 0.0, 0.0),
                                                  FockSpace(12)));
    CHECK(e == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::abs(v(13)) == doctest::Approx(1.0).epsilon(1e-12));  // |down>|0>
}

TEST_CASE("coupling lowers the ground energy") {
    auto [e, v] = ground_state(build_single_qubit(SingleQubitParams(1.0, 1.0, 0.5, 0.5),
                                                  FockSpace(60)));
    CHECK(e < -0.5);
}

TEST_CASE("degenerate ground detection") {
    HermitianOperator h;
    h.matrix = Eigen::Vector3cd(-1.0, -1.0, 2.0).asDiagonal();
    h.spin_dim = 1;
    h.fock_dim = 3;
    CHECK_THROWS_AS(ground_state(h), DegenerateGround);
}

TEST_CASE("eigenpair residual and norm") {
    HermitianOperator h = build_single_qubit(SingleQubitParams(1.0, 0.8, 0.6, 0.4), FockSpace(50));
    auto [e, v] = ground_state(h);
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    CHECK((h.matrix * v - e * v).norm() < 1e-9);
    double rayleigh = (v.adjoint() * h.matrix * v)(0, 0).real();
    CHECK(std::abs(rayleigh - e) < 1e-10);
}

TEST_CASE("phase determinism") {
    HermitianOperator h = build_single_qubit(SingleQubitParams(1.0, 1.2, 0.4, 0.3), FockSpace(30));
    auto [e1, v1] = ground_state(h);
    auto [e2, v2] = ground_state(h);
    CHECK(e1 == e2);
    CHECK((v1 - v2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("convergence at zero coupling") {
    GroundStateSolution sol = converged_ground_state(SingleQubitParams(1.0, 1.0, 0.0, 0.0));
    CHECK(sol.energy == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(sol.energy_convergence == 0.0);
}

TEST_CASE("converged energy is stable under a larger cutoff") {
    SingleQubitParams p(1.0, 1.0, 0.3, 0.3);
    GroundStateSolution sol = converged_ground_state(p);
    auto [e_bigger, v] = ground_state(build_single_qubit(p, FockSpace(sol.n_max_used + 10)));
    CHECK(std::abs(sol.energy - e_bigger) < 1e-8);
}

TEST_CASE("stronger coupling needs a larger cutoff") {
    GroundStateSolution weak = converged_ground_state(TwoQubitParams(1.0, 1.0, 0.2, 0.2));
    GroundStateSolution strong = converged_ground_state(TwoQubitParams(1.0, 1.0, 1.0, 1.0));
    CHECK(strong.n_max_used > weak.n_max_used);
}

TEST_CASE("variational monotonicity in the cutoff") {
    SingleQubitParams p(1.0, 1.0, 0.8, 0.8);
    double prev = 1e300;
    for (int n = 10; n <= 50; n += 10) {
        auto [e, v] = ground_state(build_single_qubit(p, FockSpace(n)));
        CHECK(e <= prev + 1e-14);
        prev = e;
    }
}

TEST_CASE("convergence argument validation") {
    ConvergenceSettings cs;
    cs.tol = -1.0;
    CHECK_THROWS_AS(converged_ground_state(SingleQubitParams(1.0, 1.0, 0.1, 0.1), cs), Error);
    cs.tol = 1e-8;
    cs.n_start = 4;
    CHECK_THROWS_AS(converged_ground_state(SingleQubitParams(1.0, 1.0, 0.1, 0.1), cs), Error);
}

TEST_CASE("no convergence reported when the cap is too small") {
    ConvergenceSettings cs;
    cs.tol = 1e-14;
    cs.n_start = 8;
    cs.n_step = 2;
    cs.n_cap = 12;
    CHECK_THROWS_AS(converged_ground_state(TwoQubitParams(1.0, 1.0, 1.2, 1.2), Frame::original, cs),
                    NoConvergence);
}
