#include "qcausal/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcausal/error.hpp"

namespace qcausal {

ScalarOptimum golden_section_minimize(const std::function<double(double)> &f, double lo,
                                      double hi, double tol) {
    if (!(lo <= hi)) {
        throw InputError("golden_section_minimize: empty bracket");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    ScalarOptimum best = fc <= fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};
    // The bracket ends can beat the interior when the minimum sits on the boundary.
    for (double edge : {lo, hi}) {
        if (std::abs(best.x - edge) <= 2 * tol) {
            const double fe = f(edge);
            if (fe < best.value) {
                best = {edge, fe};
            }
        }
    }
    return best;
}

ScalarOptimum scan_and_maximize(const std::function<double(double)> &f, double lo, double hi,
                                std::size_t points, double tol) {
    if (points < 3) {
        throw InputError("scan_and_maximize: need at least 3 scan points");
    }
    const double h = (hi - lo) / static_cast<double>(points - 1);
    std::size_t best = 0;
    double best_value = f(lo);
    for (std::size_t i = 1; i < points; ++i) {
        const double value = f(lo + h * static_cast<double>(i));
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    const double left = best == 0 ? lo : lo + h * static_cast<double>(best - 1);
    const double right = best + 1 >= points ? hi : lo + h * static_cast<double>(best + 1);
    const auto refined = golden_section_minimize([&](double x) { return -f(x); }, left, right, tol);
    if (-refined.value >= best_value) {
        return {refined.x, -refined.value};
    }
    return {lo + h * static_cast<double>(best), best_value};
}

BoxOptimum nelder_mead_box(const std::function<double(const std::vector<double> &)> &f,
                           std::vector<double> start, const std::vector<double> &step,
                           const std::vector<double> &lo, const std::vector<double> &hi,
                           double xtol, double ftol, std::size_t max_evaluations) {
    const std::size_t n = start.size();
    if (n == 0 || step.size() != n || lo.size() != n || hi.size() != n) {
        throw InputError("nelder_mead_box: inconsistent dimensions");
    }
    auto project = [&](std::vector<double> x) {
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = std::clamp(x[i], lo[i], hi[i]);
        }
        return x;
    };
    std::size_t evaluations = 0;
    auto eval = [&](const std::vector<double> &x) {
        ++evaluations;
        return f(x);
    };

    std::vector<std::vector<double>> simplex;
    simplex.push_back(project(std::move(start)));
    for (std::size_t i = 0; i < n; ++i) {
        auto v = simplex.front();
        v[i] += step[i];
        if (v[i] > hi[i]) {
            v[i] = simplex.front()[i] - step[i];
        }
        simplex.push_back(project(std::move(v)));
    }
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<std::size_t> order(n + 1);
    while (evaluations < max_evaluations) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        double spread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                spread = std::max(spread, std::abs(simplex[i][k] - simplex[best][k]));
            }
        }
        if (spread < xtol && values[worst] - values[best] <= ftol) {
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += simplex[i][k] / static_cast<double>(n);
            }
        }
        auto along = [&](double t) {
            std::vector<double> x(n);
            for (std::size_t k = 0; k < n; ++k) {
                x[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
            }
            return project(std::move(x));
        };

        auto reflected = along(-1.0);
        const double fr = eval(reflected);
        if (fr < values[best]) {
            auto expanded = along(-2.0);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
            continue;
        }
        const bool outside = fr < values[worst];
        auto contracted = along(outside ? -0.5 : 0.5);
        const double fc = eval(contracted);
        if (fc < (outside ? fr : values[worst])) {
            simplex[worst] = std::move(contracted);
            values[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            }
            values[i] = eval(simplex[i]);
        }
    }
    const auto it = std::min_element(values.begin(), values.end());
    const auto idx = static_cast<std::size_t>(it - values.begin());
    return {simplex[idx], *it, evaluations};
}

} // namespace qcausal
