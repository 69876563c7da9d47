#include "qcausal/causal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcausal {

double ace_from_do(const DoDistribution &d) {
    double best = 0.0;
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 2; ++a) {
            for (int a2 = 0; a2 < 2; ++a2) {
                best = std::max(best, std::abs(d(a, b) - d(a2, b)));
            }
        }
    }
    return best;
}

double cace_lb(const ObservedDistribution &p) {
    return 2 * p(0, 0, 0) + p(0, 1, 1) + p(1, 0, 1) + p(1, 1, 1) - 2;
}

double qace(const TwoQubitState &rho, const Settings &s) {
    s.validate();
    const auto bob = bob_observables(s);
    const ComplexMatrix rho_b = partial_trace_A(rho);
    const std::array<ProjectorPair, 2> proj{projectors(bob[0]), projectors(bob[1])};
    double best = 0.0;
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 2; ++a) {
            for (int a2 = 0; a2 < 2; ++a2) {
                best = std::max(best, trace_of_product(proj[a][b] - proj[a2][b], rho_b).real());
            }
        }
    }
    return std::min(best, 1.0);
}

QuantumBound qace_lb(const ObservedDistribution &p) {
    double agreement = 0.0;
    for (int x = 0; x < 2; ++x) {
        agreement += p(x, 0, 0) + p(x, 1, 1);
    }
    std::array<double, 2> bias{};
    for (int a = 0; a < 2; ++a) {
        bias[a] = (p(0, a, 0) - p(0, a, 1)) - (p(1, a, 0) - p(1, a, 1));
    }
    const double plus = (1 + bias[0]) * (1 + bias[1]);
    const double minus = (1 - bias[0]) * (1 - bias[1]);
    const double zeta = std::min(std::sqrt(std::max(plus, 0.0)), std::sqrt(std::max(minus, 0.0)));
    return {agreement - zeta - 1, zeta, plus, minus};
}

double cace_lb_analytic_ms1(double theta0, double phi0, double alpha) {
    const ComplexMatrix rho = pure_state(alpha).matrix();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    auto expect = [&](const ComplexMatrix &op) { return trace_of_product(op, rho).real(); };
    const double bob0 = expect(tensor(id, observable(phi0).matrix()));
    const double bob1 = expect(tensor(id, observable(-phi0).matrix()));
    const double alice0 = expect(tensor(observable(theta0).matrix(), id));
    const double f = 3 * std::cos(theta0) * std::cos(phi0) +
                     std::sin(2 * alpha) * std::sin(phi0) * (2 + std::sin(theta0));
    return 0.25 * (-3 + bob0 + alice0 - 2 * bob1 + f);
}

AceReport observational_report(const ObservedDistribution &p) {
    const double classical = cace_lb(p);
    const QuantumBound quantum = qace_lb(p);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {classical,     std::max(0.0, classical), nan, quantum.value,
            std::max(0.0, quantum.value), nan,       quantum.zeta};
}

AceReport report(const TwoQubitState &rho, const Settings &s) {
    AceReport r = observational_report(observed_quantum(rho, s));
    r.qace = qace(rho, s);
    r.gap = r.cace_lb_raw - r.qace;
    return r;
}

} // namespace qcausal
