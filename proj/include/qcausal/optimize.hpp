#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qcausal {

struct ScalarOptimum {
    double x;
    double value;
};

/// Golden-section search for a minimum of f on [lo, hi], stopping once the
/// bracket is narrower than tol.
ScalarOptimum golden_section_minimize(const std::function<double(double)> &f, double lo,
                                      double hi, double tol);

/// Maximum of f: evaluates `points` equally spaced samples of [lo, hi], then
/// refines around the best sample with golden-section search.
ScalarOptimum scan_and_maximize(const std::function<double(double)> &f, double lo, double hi,
                                std::size_t points, double tol);

struct BoxOptimum {
    std::vector<double> x;
    double value;
    std::size_t evaluations;
};

/**
 * Nelder-Mead minimization with trial points projected onto the box [lo, hi].
 * Stops when every simplex edge is shorter than `xtol` per coordinate and the
 * spread of vertex values is below `ftol`, or after `max_evaluations`.
 */
BoxOptimum nelder_mead_box(const std::function<double(const std::vector<double> &)> &f,
                           std::vector<double> start, const std::vector<double> &step,
                           const std::vector<double> &lo, const std::vector<double> &hi,
                           double xtol, double ftol, std::size_t max_evaluations);

} // namespace qcausal
