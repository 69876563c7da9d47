#include "qcausal/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qcausal/causal.hpp"
#include "qcausal/error.hpp"
#include "qcausal/optimize.hpp"
#include "qcausal/parallel.hpp"

namespace qcausal {

std::uint64_t CountsTable::total(int x) const noexcept {
    return n_[x][0][0] + n_[x][0][1] + n_[x][1][0] + n_[x][1][1];
}

CountsTable expected_counts(const ObservedDistribution &p, std::uint64_t total_per_setting) {
    CountsTable c;
    for (int x = 0; x < 2; ++x) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                c.set(x, a, b,
                      static_cast<std::uint64_t>(
                          std::llround(static_cast<double>(total_per_setting) * p(x, a, b))));
            }
        }
    }
    return c;
}

ObservedDistribution counts_to_distribution(const CountsTable &c) {
    std::array<std::array<std::array<double, 2>, 2>, 2> t{};
    for (int x = 0; x < 2; ++x) {
        const std::uint64_t total = c.total(x);
        if (total == 0) {
            throw InvariantError("counts: setting x=" + std::to_string(x) + " has zero total count");
        }
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                t[x][a][b] = static_cast<double>(c(x, a, b)) / static_cast<double>(total);
            }
        }
    }
    return ObservedDistribution(t);
}

namespace {

std::mt19937_64 resample_engine(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

/// One multinomial draw of the four (a, b) cells of setting x, by conditional binomials.
void resample_column(const CountsTable &observed, int x, std::mt19937_64 &rng, CountsTable &out) {
    const std::uint64_t total = observed.total(x);
    std::uint64_t remaining = total;
    double mass_left = 1.0;
    for (int cell = 0; cell < 4; ++cell) {
        const int a = cell / 2;
        const int b = cell % 2;
        std::uint64_t draw = 0;
        if (cell == 3) {
            draw = remaining;
        } else if (remaining > 0 && mass_left > 0.0) {
            const double p = static_cast<double>(observed(x, a, b)) / static_cast<double>(total);
            const double q = std::clamp(p / mass_left, 0.0, 1.0);
            std::binomial_distribution<std::uint64_t> binom(remaining, q);
            draw = binom(rng);
            mass_left -= p;
        }
        out.set(x, a, b, draw);
        remaining -= draw;
    }
}

struct Welford {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    [[nodiscard]] double sigma() const {
        return n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
    }
};

} // namespace

MonteCarloReport monte_carlo_bounds(const CountsTable &c, std::size_t samples, std::uint64_t seed,
                                    unsigned workers) {
    if (samples < kMinMonteCarloSamples) {
        throw InputError("monte carlo: samples must be at least " +
                         std::to_string(kMinMonteCarloSamples) + ", got " + std::to_string(samples));
    }
    const ObservedDistribution plugin = counts_to_distribution(c);
    std::vector<double> classical(samples);
    std::vector<double> quantum(samples);
    parallel_for(samples, workers, [&](std::size_t i) {
        auto rng = resample_engine(seed, i);
        CountsTable draw;
        for (int x = 0; x < 2; ++x) {
            resample_column(c, x, rng, draw);
        }
        const ObservedDistribution p = counts_to_distribution(draw);
        classical[i] = cace_lb(p);
        quantum[i] = qace_lb(p).value;
    });
    Welford wc;
    Welford wq;
    for (std::size_t i = 0; i < samples; ++i) {
        wc.add(classical[i]);
        wq.add(quantum[i]);
    }
    return {cace_lb(plugin),         qace_lb(plugin).value, {wc.mean, wc.sigma()},
            {wq.mean, wq.sigma()},   samples,               seed};
}

double sigma_distance(const UncertainValue &u, double reference) {
    if (!(u.sigma > 0.0)) {
        throw InputError("sigma_distance: sigma must be positive");
    }
    return std::abs(u.value - reference) / u.sigma;
}

FitObjective::FitObjective(const std::vector<DatasetPoint> &dataset, Family family) {
    points_.reserve(dataset.size());
    for (const auto &pt : dataset) {
        const Settings base = family_settings(family, pt.alpha, pt.phi0);
        points_.push_back({pt.alpha, with_hardware(base, pt.alpha, std::numbers::pi), pt.empirical});
    }
}

double FitObjective::operator()(double v, double lambda, double delta) const {
    double sum = 0.0;
    for (const auto &pt : points_) {
        Settings s = pt.settings;
        s.hardware->delta = delta;
        const ObservedDistribution model = observed_quantum(noisy_state(pt.alpha, {v, lambda}), s);
        for (std::size_t i = 0; i < 8; ++i) {
            const double d = model.flat()[i] - pt.empirical.flat()[i];
            sum += d * d;
        }
    }
    return sum;
}

double fit_objective(const std::vector<DatasetPoint> &dataset, Family family, double v,
                     double lambda, double delta) {
    return FitObjective(dataset, family)(v, lambda, delta);
}

FitResult fit_noise(const std::vector<DatasetPoint> &dataset, Family family, unsigned workers) {
    if (dataset.size() < 3) {
        throw InputError("fit: need at least 3 alpha points, got " + std::to_string(dataset.size()));
    }
    const FitObjective objective(dataset, family);

    constexpr std::size_t kGrid = 21;
    auto grid_value = [](std::size_t i, double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(kGrid - 1);
    };
    std::vector<double> values(kGrid * kGrid * kGrid);
    parallel_for(values.size(), workers, [&](std::size_t idx) {
        const std::size_t i = idx / (kGrid * kGrid);
        const std::size_t j = (idx / kGrid) % kGrid;
        const std::size_t k = idx % kGrid;
        values[idx] = objective(grid_value(i, 0, 1), grid_value(j, 0, 1),
                                grid_value(k, kFitDeltaMin, kFitDeltaMax));
    });
    const auto best_it = std::min_element(values.begin(), values.end());
    const auto best = static_cast<std::size_t>(best_it - values.begin());
    std::vector<double> start{grid_value(best / (kGrid * kGrid), 0, 1),
                              grid_value((best / kGrid) % kGrid, 0, 1),
                              grid_value(best % kGrid, kFitDeltaMin, kFitDeltaMax)};

    const std::vector<double> lo{0.0, 0.0, kFitDeltaMin};
    const std::vector<double> hi{1.0, 1.0, kFitDeltaMax};
    auto f = [&](const std::vector<double> &z) { return objective(z[0], z[1], z[2]); };
    std::vector<double> step{0.05, 0.05, (kFitDeltaMax - kFitDeltaMin) / 20};
    std::size_t evaluations = values.size();
    BoxOptimum opt{start, *best_it, 0};
    // Restarts shake the simplex out of premature collapse along flat directions.
    for (int round = 0; round < 3; ++round) {
        const auto next = nelder_mead_box(f, opt.x, step, lo, hi, 1e-10, 1e-22, 4000);
        evaluations += next.evaluations;
        if (next.value <= opt.value) {
            opt = next;
        }
        for (double &s : step) {
            s *= 0.1;
        }
    }

    FitResult out;
    out.v = opt.x[0];
    out.lambda = opt.x[1];
    out.delta = opt.x[2];
    out.residual = opt.value;
    out.lambda_unidentifiable = out.v >= 1.0 - 1e-3;
    for (std::size_t k = 0; k < 3; ++k) {
        const double h = 1e-2;
        bool flat = true;
        for (double sign : {-1.0, 1.0}) {
            auto z = opt.x;
            z[k] = std::clamp(z[k] + sign * h, lo[k], hi[k]);
            if (std::abs(f(z) - opt.value) > 1e-9) {
                flat = false;
            }
        }
        out.flat[k] = flat;
    }
    out.evaluations = evaluations;
    return out;
}

} // namespace qcausal
