#include "qcausal/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcausal/error.hpp"

namespace qcausal {

namespace {

double checked_probability(double value, const char *what) {
    if (!std::isfinite(value) || value < -kProbabilitySlack || value > 1.0 + kProbabilitySlack) {
        throw InvariantError(std::string(what) + ": probability " + std::to_string(value) +
                             " outside [0, 1]");
    }
    return std::clamp(value, 0.0, 1.0);
}

} // namespace

ObservedDistribution::ObservedDistribution(
    const std::array<std::array<std::array<double, 2>, 2>, 2> &pxab) {
    for (int x = 0; x < 2; ++x) {
        double total = 0.0;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const double raw = pxab[x][a][b];
                total += raw;
                p_[static_cast<std::size_t>(4 * x + 2 * a + b)] =
                    checked_probability(raw, "ObservedDistribution");
            }
        }
        if (std::abs(total - 1.0) > kNormalizationTolerance) {
            throw InvariantError("ObservedDistribution: sum over (a,b) for x=" + std::to_string(x) +
                                 " is " + std::to_string(total) + ", not 1");
        }
    }
}

ObservedDistribution ObservedDistribution::uniform() {
    std::array<std::array<std::array<double, 2>, 2>, 2> t{};
    for (auto &xa : t) {
        for (auto &ab : xa) {
            ab = {0.25, 0.25};
        }
    }
    return ObservedDistribution(t);
}

DoDistribution::DoDistribution(const std::array<std::array<double, 2>, 2> &pab) {
    for (int a = 0; a < 2; ++a) {
        double total = 0.0;
        for (int b = 0; b < 2; ++b) {
            total += pab[a][b];
            p_[static_cast<std::size_t>(2 * a + b)] = checked_probability(pab[a][b], "DoDistribution");
        }
        if (std::abs(total - 1.0) > kNormalizationTolerance) {
            throw InvariantError("DoDistribution: sum over b for a=" + std::to_string(a) + " is " +
                                 std::to_string(total) + ", not 1");
        }
    }
}

ClassicalModel::ClassicalModel(const std::array<double, kStrategyCount> &weights)
    : weights_(weights) {
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw InvariantError("ClassicalModel: weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvariantError("ClassicalModel: weights must sum to 1");
    }
}

ClassicalModel ClassicalModel::point_mass(Strategy s) {
    std::array<double, kStrategyCount> w{};
    w[s.index()] = 1.0;
    return ClassicalModel(w);
}

std::array<Observable, 2> bob_observables(const Settings &s) {
    if (s.hardware) {
        // Alice's outcome 0 triggers the cell; outcome 1 leaves it idle.
        return {effective_observable(s.phi1, *s.hardware, true), observable(s.phi1)};
    }
    return {observable(s.phi0), observable(s.phi1)};
}

ObservedDistribution observed_quantum(const TwoQubitState &rho, const Settings &s) {
    s.validate();
    const auto bob = bob_observables(s);
    const std::array<ProjectorPair, 2> bob_proj{projectors(bob[0]), projectors(bob[1])};
    const std::array<double, 2> thetas{s.theta0, s.theta1};
    std::array<std::array<std::array<double, 2>, 2>, 2> t{};
    for (int x = 0; x < 2; ++x) {
        const ProjectorPair alice = projectors(observable(thetas[x]));
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                t[x][a][b] =
                    trace_of_product(tensor(alice[a], bob_proj[a][b]), rho.matrix()).real();
            }
        }
    }
    return ObservedDistribution(t);
}

DoDistribution do_quantum(const TwoQubitState &rho, const Settings &s) {
    s.validate();
    const auto bob = bob_observables(s);
    const ComplexMatrix rho_b = partial_trace_A(rho);
    std::array<std::array<double, 2>, 2> t{};
    for (int a = 0; a < 2; ++a) {
        const ProjectorPair proj = projectors(bob[static_cast<std::size_t>(a)]);
        for (int b = 0; b < 2; ++b) {
            t[a][b] = trace_of_product(proj[b], rho_b).real();
        }
    }
    return DoDistribution(t);
}

ObservedDistribution observed_classical(const ClassicalModel &m) {
    std::array<std::array<std::array<double, 2>, 2>, 2> t{};
    for (std::size_t i = 0; i < kStrategyCount; ++i) {
        const Strategy s = Strategy::from_index(i);
        for (int x = 0; x < 2; ++x) {
            const int a = apply(s.f, x);
            t[x][a][apply(s.g, a)] += m.weights()[i];
        }
    }
    return ObservedDistribution(t);
}

DoDistribution do_classical(const ClassicalModel &m) {
    std::array<std::array<double, 2>, 2> t{};
    for (std::size_t i = 0; i < kStrategyCount; ++i) {
        const Strategy s = Strategy::from_index(i);
        for (int a = 0; a < 2; ++a) {
            t[a][apply(s.g, a)] += m.weights()[i];
        }
    }
    return DoDistribution(t);
}

} // namespace qcausal
