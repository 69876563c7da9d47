#include "qcausal/states.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qcausal/error.hpp"

namespace qcausal {

namespace {

// Probe vectors: basis states and all pairs (|i> + c|j>)/sqrt2 with c in {1,-1,i,-i}.
const std::vector<std::array<Complex, 4>> &probe_vectors() {
    static const std::vector<std::array<Complex, 4>> probes = [] {
        std::vector<std::array<Complex, 4>> out;
        for (std::size_t i = 0; i < 4; ++i) {
            std::array<Complex, 4> e{};
            e[i] = 1.0;
            out.push_back(e);
        }
        const std::array<Complex, 4> phases{Complex{1, 0}, Complex{-1, 0}, Complex{0, 1},
                                            Complex{0, -1}};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                for (const auto &c : phases) {
                    std::array<Complex, 4> v{};
                    v[i] = std::numbers::sqrt2 / 2;
                    v[j] = c * (std::numbers::sqrt2 / 2);
                    out.push_back(v);
                }
            }
        }
        return out;
    }();
    return probes;
}

void validate_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
        throw InputError("alpha must lie in [0, pi/2], got " + std::to_string(alpha));
    }
}

} // namespace

TwoQubitState::TwoQubitState(ComplexMatrix rho) : rho_(rho) {
    if (rho_.rows() != 4 || rho_.cols() != 4) {
        throw InvariantError("TwoQubitState: density matrix must be 4x4");
    }
    if (!is_hermitian(rho_)) {
        throw InvariantError("TwoQubitState: density matrix is not Hermitian");
    }
    if (std::abs(trace(rho_) - 1.0) > kTolerance) {
        throw InvariantError("TwoQubitState: trace is not 1");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (rho_(i, i).real() < -kTolerance) {
            throw InvariantError("TwoQubitState: negative diagonal entry");
        }
        for (std::size_t j = i + 1; j < 4; ++j) {
            const double minor = rho_(i, i).real() * rho_(j, j).real() - std::norm(rho_(i, j));
            if (minor < -kTolerance) {
                throw InvariantError("TwoQubitState: negative 2x2 principal minor");
            }
        }
    }
    for (const auto &v : probe_vectors()) {
        Complex expectation = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                expectation += std::conj(v[i]) * rho_(i, j) * v[j];
            }
        }
        if (expectation.real() < -kTolerance) {
            throw InvariantError("TwoQubitState: not positive semidefinite");
        }
    }
}

ComplexMatrix partial_trace_A(const TwoQubitState &rho) { return partial_trace_A(rho.matrix()); }

void NoiseParams::validate() const {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InputError("noise visibility v must lie in [0, 1], got " + std::to_string(v));
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw InputError("colored-noise fraction lambda must lie in [0, 1], got " +
                         std::to_string(lambda));
    }
}

TwoQubitState pure_state(double alpha) {
    validate_alpha(alpha);
    const std::array<Complex, 4> psi{std::cos(alpha), 0.0, 0.0, std::sin(alpha)};
    return TwoQubitState(outer(psi));
}

TwoQubitState noisy_state(double alpha, const NoiseParams &noise) {
    validate_alpha(alpha);
    noise.validate();
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    const std::array<Complex, 4> plus{c, 0.0, 0.0, s};
    const std::array<Complex, 4> minus{c, 0.0, 0.0, -s};
    const ComplexMatrix p_plus = outer(plus);
    const ComplexMatrix colored = 0.5 * (p_plus + outer(minus));
    const ComplexMatrix white = 0.25 * ComplexMatrix::identity(4);
    const double v = noise.v;
    const double lam = noise.lambda;
    return TwoQubitState(v * p_plus + (1.0 - v) * (lam * colored + (1.0 - lam) * white));
}

} // namespace qcausal
