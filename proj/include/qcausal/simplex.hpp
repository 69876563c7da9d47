#pragma once

/**
 * @file simplex.hpp
 * Dense two-phase simplex for small linear programs
 *
 *     minimize    c.x
 *     subject to  A_eq x = b_eq,  A_ub x <= b_ub,  x >= 0.
 *
 * Bland's rule is used for both entering and leaving variables, so the pivot
 * sequence (and therefore the returned vertex) is deterministic.
 */

#include <cstddef>
#include <vector>

namespace qcausal {

struct LinearProgram {
    std::vector<double> cost;
    std::vector<std::vector<double>> a_eq;
    std::vector<double> b_eq;
    std::vector<std::vector<double>> a_ub;
    std::vector<double> b_ub;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
    /// Phase-one optimum: L1 norm of the residual of the equality system.
    double infeasibility = 0.0;
    /// Equality rows kept after rank-revealing elimination.
    std::size_t independent_equalities = 0;
};

struct SimplexOptions {
    /// Pivot tolerance of the rank-revealing elimination on the equalities.
    double rank_tolerance = 1e-10;
    /// A dependent equality whose right-hand side is off by more than this,
    /// or a phase-one optimum above it, makes the problem infeasible.
    double feasibility_tolerance = 1e-7;
    double pivot_tolerance = 1e-12;
    std::size_t max_pivots = 10000;
};

LpSolution solve_lp(const LinearProgram &lp, const SimplexOptions &options = {});

} // namespace qcausal
