#pragma once

#include "qcausal/qmath.hpp"

namespace qcausal {

/**
 * Two-qubit density operator.
 *
 * Construction validates Hermiticity, unit trace and positivity (a fixed probe
 * set of pure states plus all 2x2 principal minors) and throws InvariantError
 * naming the first violated condition.
 */
class TwoQubitState {
  public:
    explicit TwoQubitState(ComplexMatrix rho);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return rho_; }

  private:
    ComplexMatrix rho_;
};

/// Reduced state of the second (Bob) qubit.
ComplexMatrix partial_trace_A(const TwoQubitState &rho);

/// White-noise visibility v and colored-noise fraction lambda, both in [0, 1].
struct NoiseParams {
    double v = 1.0;
    double lambda = 0.0;

    void validate() const;
};

/// |psi(alpha)><psi(alpha)| with |psi(alpha)> = cos(alpha)|00> + sin(alpha)|11>, alpha in [0, pi/2].
TwoQubitState pure_state(double alpha);

/**
 * v |psi+><psi+| + (1-v) [ lambda/2 (|psi+><psi+| + |psi-><psi-|) + (1-lambda)/4 I ]
 * with |psi+-> = cos(alpha)|00> +- sin(alpha)|11>.
 */
TwoQubitState noisy_state(double alpha, const NoiseParams &noise);

} // namespace qcausal
