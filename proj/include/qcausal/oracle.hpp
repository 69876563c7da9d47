#pragma once

/**
 * @file oracle.hpp
 * Linear-programming certification over the 16 deterministic instrumental
 * strategies: the smallest classical ACE compatible with an observed p(a,b|x).
 */

#include <array>
#include <vector>

#include "qcausal/scenario.hpp"
#include "qcausal/simplex.hpp"

namespace qcausal {

struct OracleResult {
    double min_ace = 0.0;
    bool feasible = false;
    /// Weights over strategies in Strategy::index() order; empty when infeasible.
    std::vector<double> witness_weights;
    /// L1 residual of the equality system after phase one.
    double infeasibility = 0.0;
};

/// All 16 (f, g) pairs in Strategy::index() order.
std::vector<Strategy> enumerate_strategies();

/**
 * minimize t over weights w >= 0 with sum w = 1, the observational equalities
 * sum_lambda w [f(x)=a][g(a)=b] = p(a,b|x), and |p(0|do(0)) - p(0|do(1))| <= t.
 * Only b = 0 is constrained: for binary B the b = 1 difference has equal magnitude.
 */
OracleResult min_classical_ace(const ObservedDistribution &p);

/// True iff some classical instrumental model reproduces p.
bool check_realizability(const ObservedDistribution &p);

} // namespace qcausal
