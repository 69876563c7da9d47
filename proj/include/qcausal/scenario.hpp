#pragma once

/**
 * @file scenario.hpp
 * Observational p(a,b|x) and interventional p(b|do(a)) statistics of the binary
 * instrumental scenario X -> A -> B, from quantum and classical models.
 */

#include <array>
#include <cstddef>
#include <span>

#include "qcausal/measurement.hpp"
#include "qcausal/states.hpp"

namespace qcausal {

/// Slack allowed outside [0, 1] before a computed probability is rejected.
inline constexpr double kProbabilitySlack = 1e-8;
/// Tolerance on per-setting normalization.
inline constexpr double kNormalizationTolerance = 1e-9;

/// p(a,b|x) over binary x, a, b.
class ObservedDistribution {
  public:
    /// Entries indexed [x][a][b]. Throws InvariantError if an entry leaves [0,1]
    /// by more than kProbabilitySlack or a setting does not sum to 1.
    /// Entries are then clamped into [0,1].
    explicit ObservedDistribution(const std::array<std::array<std::array<double, 2>, 2>, 2> &pxab);

    static ObservedDistribution uniform();

    [[nodiscard]] double operator()(int x, int a, int b) const noexcept {
        return p_[static_cast<std::size_t>(4 * x + 2 * a + b)];
    }
    /// Flat view, index 4x + 2a + b.
    [[nodiscard]] std::span<const double, 8> flat() const noexcept { return p_; }

  private:
    std::array<double, 8> p_{};
};

/// p(b|do(a)) over binary a, b.
class DoDistribution {
  public:
    /// Entries indexed [a][b]; same validation as ObservedDistribution.
    explicit DoDistribution(const std::array<std::array<double, 2>, 2> &pab);

    [[nodiscard]] double operator()(int a, int b) const noexcept {
        return p_[static_cast<std::size_t>(2 * a + b)];
    }

  private:
    std::array<double, 4> p_{};
};

/// The four functions {0,1} -> {0,1}.
enum class ResponseFunction { Zero = 0, One = 1, Identity = 2, Negation = 3 };

[[nodiscard]] constexpr int apply(ResponseFunction fn, int bit) noexcept {
    switch (fn) {
    case ResponseFunction::Zero:
        return 0;
    case ResponseFunction::One:
        return 1;
    case ResponseFunction::Identity:
        return bit;
    case ResponseFunction::Negation:
        return 1 - bit;
    }
    return 0;
}

/// Deterministic instrumental strategy: a = f(x), b = g(a).
struct Strategy {
    ResponseFunction f;
    ResponseFunction g;

    /// Position in the canonical ordering, 4 * f + g.
    [[nodiscard]] constexpr std::size_t index() const noexcept {
        return 4 * static_cast<std::size_t>(f) + static_cast<std::size_t>(g);
    }
    [[nodiscard]] static constexpr Strategy from_index(std::size_t i) noexcept {
        return {static_cast<ResponseFunction>(i / 4), static_cast<ResponseFunction>(i % 4)};
    }
    friend constexpr bool operator==(const Strategy &, const Strategy &) = default;
};

inline constexpr std::size_t kStrategyCount = 16;

/// Probability weights over the 16 strategies, in Strategy::index() order.
class ClassicalModel {
  public:
    /// Throws InvariantError on negative weights or a sum differing from 1 by more than 1e-12.
    explicit ClassicalModel(const std::array<double, kStrategyCount> &weights);

    static ClassicalModel point_mass(Strategy s);

    [[nodiscard]] const std::array<double, kStrategyCount> &weights() const noexcept {
        return weights_;
    }

  private:
    std::array<double, kStrategyCount> weights_;
};

/// Bob's observables (N^0, N^1) for the given settings; see Settings::hardware.
std::array<Observable, 2> bob_observables(const Settings &s);

/// Born rule: p(a,b|x) = Tr[(M^x_a (x) N^a_b) rho].
ObservedDistribution observed_quantum(const TwoQubitState &rho, const Settings &s);

/// p(b|do(a)) = Tr[N^a_b rho_B].
DoDistribution do_quantum(const TwoQubitState &rho, const Settings &s);

/// p(a,b|x) = sum_lambda w_lambda [f(x) = a][g(a) = b].
ObservedDistribution observed_classical(const ClassicalModel &m);

/// p(b|do(a)) = sum_lambda w_lambda [g(a) = b].
DoDistribution do_classical(const ClassicalModel &m);

} // namespace qcausal
