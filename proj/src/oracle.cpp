#include "qcausal/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace qcausal {

std::vector<Strategy> enumerate_strategies() {
    std::vector<Strategy> out;
    out.reserve(kStrategyCount);
    for (std::size_t i = 0; i < kStrategyCount; ++i) {
        out.push_back(Strategy::from_index(i));
    }
    return out;
}

OracleResult min_classical_ace(const ObservedDistribution &p) {
    // Variables: w_0..w_15, then t.
    constexpr std::size_t n = kStrategyCount + 1;
    LinearProgram lp;
    lp.cost.assign(n, 0.0);
    lp.cost.back() = 1.0;

    const auto strategies = enumerate_strategies();
    for (int x = 0; x < 2; ++x) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                std::vector<double> row(n, 0.0);
                for (std::size_t i = 0; i < kStrategyCount; ++i) {
                    const Strategy &s = strategies[i];
                    row[i] = (apply(s.f, x) == a && apply(s.g, a) == b) ? 1.0 : 0.0;
                }
                lp.a_eq.push_back(std::move(row));
                lp.b_eq.push_back(p(x, a, b));
            }
        }
    }
    std::vector<double> normalization(n, 1.0);
    normalization.back() = 0.0;
    lp.a_eq.push_back(std::move(normalization));
    lp.b_eq.push_back(1.0);

    // d = p(0|do(0)) - p(0|do(1)); d - t <= 0 and -d - t <= 0.
    std::vector<double> diff(n, 0.0);
    for (std::size_t i = 0; i < kStrategyCount; ++i) {
        const Strategy &s = strategies[i];
        diff[i] = (apply(s.g, 0) == 0 ? 1.0 : 0.0) - (apply(s.g, 1) == 0 ? 1.0 : 0.0);
    }
    for (double sign : {1.0, -1.0}) {
        std::vector<double> row(n);
        for (std::size_t i = 0; i < kStrategyCount; ++i) {
            row[i] = sign * diff[i];
        }
        row.back() = -1.0;
        lp.a_ub.push_back(std::move(row));
        lp.b_ub.push_back(0.0);
    }

    const LpSolution sol = solve_lp(lp);
    OracleResult out;
    out.infeasibility = sol.infeasibility;
    if (sol.status != LpStatus::Optimal) {
        return out;
    }
    out.feasible = true;
    out.min_ace = sol.objective;
    out.witness_weights.assign(sol.x.begin(), sol.x.begin() + kStrategyCount);
    return out;
}

bool check_realizability(const ObservedDistribution &p) { return min_classical_ace(p).feasible; }

} // namespace qcausal
