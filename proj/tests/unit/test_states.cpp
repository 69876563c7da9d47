#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcausal/error.hpp"
#include "qcausal/measurement.hpp"
#include "qcausal/states.hpp"
#include "test_support.hpp"

using namespace qcausal;
using namespace qcausal::testing;

namespace {

ComplexMatrix projector_on(std::array<Complex, 4> v) { return outer(v); }

} // namespace

TEST_CASE("pure_state examples") {
    CHECK(approx_equal(pure_state(0.0).matrix(), projector_on({1, 0, 0, 0})));
    const double h = std::sqrt(0.5);
    CHECK(approx_equal(pure_state(kPi / 4).matrix(), projector_on({h, 0, 0, h})));

    const auto rho = pure_state(kPi / 8).matrix();
    const double c = std::cos(kPi / 8);
    const double s = std::sin(kPi / 8);
    CHECK(std::abs(rho(0, 0) - c * c) < 1e-15);
    CHECK(std::abs(rho(1, 1)) < 1e-15);
    CHECK(std::abs(rho(2, 2)) < 1e-15);
    CHECK(std::abs(rho(3, 3) - s * s) < 1e-15);
    CHECK(std::abs(rho(0, 3) - c * s) < 1e-15);
    CHECK(std::abs(rho(3, 0) - c * s) < 1e-15);
}

TEST_CASE("pure_state rejects alpha outside [0, pi/2]") {
    CHECK_THROWS_AS(pure_state(-1e-6), InputError);
    CHECK_THROWS_AS(pure_state(kPi / 2 + 1e-6), InputError);
    CHECK_THROWS_AS(pure_state(std::nan("")), InputError);
    CHECK_NOTHROW(pure_state(kPi / 2));
}

TEST_CASE("noisy_state examples") {
    for (double lambda : {0.0, 0.3, 1.0}) {
        CHECK(approx_equal(noisy_state(0.6, {1.0, lambda}).matrix(), pure_state(0.6).matrix()));
    }
    CHECK(approx_equal(noisy_state(0.6, {0.0, 0.0}).matrix(), 0.25 * ComplexMatrix::identity(4)));
    // v=0, lambda=1 at alpha=pi/4: the +- mixture keeps only the diagonal |00>, |11> weight.
    const ComplexMatrix expected(4, 4, {0.5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0.5});
    CHECK(approx_equal(noisy_state(kPi / 4, {0.0, 1.0}).matrix(), expected, 1e-12));
}

TEST_CASE("noisy_state parameter validation") {
    CHECK_THROWS_AS(noisy_state(0.3, {1.1, 0.5}), InputError);
    CHECK_THROWS_AS(noisy_state(0.3, {0.5, -0.1}), InputError);
    CHECK_THROWS_AS(noisy_state(2.0, {0.5, 0.5}), InputError);
}

TEST_CASE("coherence scales linearly in v at fixed lambda") {
    const double alpha = 0.5;
    const double lambda = 0.93;
    const double full = std::cos(alpha) * std::sin(alpha);
    for (double v : {0.2, 0.5, 0.81}) {
        CHECK(std::abs(noisy_state(alpha, {v, lambda}).matrix()(0, 3) - v * full) < 1e-12);
    }
}

TEST_CASE("reduced state of the noise family is diagonal") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = u(rng) * kPi / 2;
        const NoiseParams noise{u(rng), u(rng)};
        const auto rb = partial_trace_A(noisy_state(alpha, noise));
        const double c2 = std::cos(alpha) * std::cos(alpha);
        const double expected = noise.v * c2 + (1 - noise.v) * (noise.lambda * c2 + (1 - noise.lambda) / 2);
        CHECK(std::abs(rb(0, 1)) < 1e-12);
        CHECK(std::abs(rb(0, 0) - expected) < 1e-12);
        CHECK(std::abs(trace_of_product(pauli_x(), rb)) < 1e-12);
        CHECK(std::abs(trace_of_product(pauli_y(), rb)) < 1e-12);
    }
}

TEST_CASE("TwoQubitState invariants are enforced") {
    CHECK_THROWS_AS(TwoQubitState(ComplexMatrix::identity(4)), InvariantError); // trace 4
    CHECK_THROWS_AS(TwoQubitState(ComplexMatrix::identity(2)), InvariantError);
    const ComplexMatrix non_hermitian(4, 4, {0.25, 0.1, 0, 0, 0, 0.25, 0, 0, 0, 0, 0.25, 0, 0, 0, 0, 0.25});
    CHECK_THROWS_AS(TwoQubitState{non_hermitian}, InvariantError);
    // Unit trace and Hermitian but with a -0.25 eigenvalue along (|00> - |11>)/sqrt2.
    const ComplexMatrix indefinite(4, 4, {0.25, 0, 0, 0.5, 0, 0.25, 0, 0, 0, 0, 0.25, 0, 0.5, 0, 0, 0.25});
    CHECK_THROWS_AS(TwoQubitState{indefinite}, InvariantError);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        CHECK_NOTHROW(noisy_state(u(rng) * kPi / 2, {u(rng), u(rng)}));
        CHECK_NOTHROW(random_state(rng, trial % 2 == 0));
    }
}
