#pragma once

/**
 * @file causal.hpp
 * Average causal effect and its classical and quantum lower bounds.
 */

#include "qcausal/scenario.hpp"

namespace qcausal {

/// Quantum lower bound on qACE from observational data, with its zeta term.
struct QuantumBound {
    double value;
    double zeta;
    /// Products under the square root for the + and - branches, before clamping at 0.
    double radicand_plus;
    double radicand_minus;
};

struct AceReport {
    double cace_lb_raw;
    double cace_lb;
    double qace;
    double qace_lb_raw;
    double qace_lb;
    /// cace_lb_raw - qace; positive values witness a quantum violation.
    double gap;
    double zeta;
};

/// max over a, a', b of |p(b|do(a)) - p(b|do(a'))|.
double ace_from_do(const DoDistribution &d);

/// 2p(0,0|0) + p(1,1|0) + p(0,1|1) + p(1,1|1) - 2. May be negative.
double cace_lb(const ObservedDistribution &p);

/// max over a, a', b of Tr[(N^a_b - N^a'_b) rho_B].
double qace(const TwoQubitState &rho, const Settings &s);

/**
 * sum_x (p(0,0|x) + p(1,1|x)) - zeta - 1, with
 * zeta = min over +- of sqrt( prod_a [1 +- sum_x (-1)^x (p(a,0|x) - p(a,1|x))] ).
 * A negative product is clamped to 0 before the square root.
 */
QuantumBound qace_lb(const ObservedDistribution &p);

/**
 * Closed form of cace_lb for the family phi1 = -phi0, theta1 = -pi/2 on
 * pure_state(alpha):
 * (1/4)(-3 + <I (x) N(phi0)> + <M(theta0) (x) I> - 2<I (x) N(phi1)> + f),
 * f = 3 cos(theta0) cos(phi0) + sin(2 alpha) sin(phi0) (2 + sin(theta0)).
 */
double cace_lb_analytic_ms1(double theta0, double phi0, double alpha);

/// All bounds for one quantum model; clamped fields are max(0, raw).
AceReport report(const TwoQubitState &rho, const Settings &s);

/// Bounds computable from observational data alone (qace and gap are NaN).
AceReport observational_report(const ObservedDistribution &p);

} // namespace qcausal
