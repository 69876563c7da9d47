#pragma once

/**
 * @file stats.hpp
 * Count tables, Monte Carlo error bars for the observational bounds, sigma
 * distances, and fitting of the (v, lambda, delta) noise model.
 */

#include <array>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "qcausal/scenario.hpp"
#include "qcausal/settings_gen.hpp"

namespace qcausal {

/// Event counts n(x, a, b).
class CountsTable {
  public:
    CountsTable() = default;
    explicit CountsTable(const std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2> &n)
        : n_(n) {}

    [[nodiscard]] std::uint64_t operator()(int x, int a, int b) const noexcept { return n_[x][a][b]; }
    void set(int x, int a, int b, std::uint64_t count) noexcept { n_[x][a][b] = count; }
    [[nodiscard]] std::uint64_t total(int x) const noexcept;

  private:
    std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2> n_{};
};

/// Expected counts round(total_per_setting * p(a,b|x)), used for synthetic data.
CountsTable expected_counts(const ObservedDistribution &p, std::uint64_t total_per_setting);

struct UncertainValue {
    double value;
    double sigma;
};

/// p(a,b|x) = n(x,a,b) / sum_{a,b} n(x,a,b). Throws InvariantError naming a zero-total x.
ObservedDistribution counts_to_distribution(const CountsTable &c);

inline constexpr std::size_t kMinMonteCarloSamples = 100;

struct MonteCarloReport {
    /// Plug-in values on the observed frequencies.
    double cace_lb_plugin;
    double qace_lb_plugin;
    /// Resample mean and standard deviation of the raw bounds.
    UncertainValue cace_lb;
    UncertainValue qace_lb;
    std::size_t samples;
    std::uint64_t seed;
};

/**
 * Resamples each x-column from a multinomial with the observed total and
 * empirical probabilities and recomputes cace_lb and qace_lb. Resample i draws
 * from its own generator seeded by (seed, i), so the report is identical for
 * any worker count.
 */
MonteCarloReport monte_carlo_bounds(const CountsTable &c, std::size_t samples, std::uint64_t seed,
                                    unsigned workers = 1);

/// |value - reference| / sigma. Throws InputError for sigma <= 0.
double sigma_distance(const UncertainValue &u, double reference);

struct DatasetPoint {
    double alpha;
    /// MS1 only: phi0 used in the run; the per-alpha optimum when absent.
    std::optional<double> phi0;
    ObservedDistribution empirical;
};

struct FitResult {
    double v;
    double lambda;
    double delta;
    /// Sum over dataset points and (x,a,b) of squared probability errors.
    double residual;
    /// lambda has no effect on the model (v within 1e-3 of 1).
    bool lambda_unidentifiable = false;
    /// Per-parameter (v, lambda, delta) flag: objective flat within 1e-9 when it moves.
    std::array<bool, 3> flat{};
    std::size_t evaluations = 0;
};

/// Search window for delta.
inline constexpr double kFitDeltaMin = 0.6 * std::numbers::pi;
inline constexpr double kFitDeltaMax = std::numbers::pi;

/// Squared-error objective of the noise model; settings and eta are solved once.
class FitObjective {
  public:
    FitObjective(const std::vector<DatasetPoint> &dataset, Family family);
    [[nodiscard]] double operator()(double v, double lambda, double delta) const;

  private:
    struct Point {
        double alpha;
        Settings settings; // eta solved at delta = pi; delta substituted per call
        ObservedDistribution empirical;
    };
    std::vector<Point> points_;
};

/// FitObjective(dataset, family)(v, lambda, delta).
double fit_objective(const std::vector<DatasetPoint> &dataset, Family family, double v,
                     double lambda, double delta);

/**
 * Least-squares fit of p(a,b|x) = observed_quantum(noisy_state(alpha, v, lambda),
 * settings with a cell of phase delta). Coarse 21^3 grid over
 * [0,1] x [0,1] x [0.6pi, pi], then Nelder-Mead refinement within the box.
 * Requires at least 3 points.
 */
FitResult fit_noise(const std::vector<DatasetPoint> &dataset, Family family, unsigned workers = 1);

} // namespace qcausal
