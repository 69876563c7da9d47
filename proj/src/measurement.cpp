#include "qcausal/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qcausal/error.hpp"
#include "qcausal/optimize.hpp"
#include "qcausal/states.hpp"

namespace qcausal {

Observable::Observable(ComplexMatrix matrix, std::optional<double> angle)
    : matrix_(matrix), angle_(angle) {
    if (matrix_.rows() != 2 || matrix_.cols() != 2 || !is_hermitian(matrix_)) {
        throw InvariantError("Observable: matrix must be 2x2 Hermitian");
    }
    const auto eig = eigh2(matrix_);
    if (std::abs(eig.values[0] + 1.0) > kTolerance || std::abs(eig.values[1] - 1.0) > kTolerance) {
        throw InvariantError("Observable: eigenvalues must be +1 and -1");
    }
}

void HardwareParams::validate() const {
    if (!(delta > 0.0 && delta <= 2 * std::numbers::pi)) {
        throw InputError("Pockels phase delta must lie in (0, 2pi], got " + std::to_string(delta));
    }
    if (!(eta >= -std::numbers::pi / 2 && eta <= std::numbers::pi / 2)) {
        throw InputError("cell rotation eta must lie in [-pi/2, pi/2], got " + std::to_string(eta));
    }
}

void Settings::validate() const {
    for (double angle : {theta0, theta1, phi0, phi1}) {
        if (!std::isfinite(angle)) {
            throw InputError("Settings: measurement angles must be finite");
        }
    }
    if (hardware) {
        hardware->validate();
    }
}

Observable observable(double angle) {
    if (!std::isfinite(angle)) {
        throw InputError("observable: angle must be finite");
    }
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Observable(ComplexMatrix(2, 2, {c, s, s, -c}), angle);
}

ProjectorPair projectors(const Observable &obs) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    return {0.5 * (id + obs.matrix()), 0.5 * (id - obs.matrix())};
}

ComplexMatrix pockels(double delta) {
    return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, std::polar(1.0, delta)});
}

ComplexMatrix rotation(double eta) {
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    return ComplexMatrix(2, 2, {c, -s, s, c});
}

Observable effective_observable(double base_phi, const HardwareParams &hw, bool triggered) {
    const Observable base = observable(base_phi);
    if (!triggered) {
        return base;
    }
    const ComplexMatrix u = matmul(matmul(rotation(hw.eta), pockels(hw.delta)), rotation(-hw.eta));
    return Observable(matmul(matmul(adjoint(u), base.matrix()), u));
}

EtaSolveError::EtaSolveError(double eta_, double residual_)
    : std::runtime_error("solve_eta: residual " + std::to_string(residual_) +
                         " above tolerance at eta = " + std::to_string(eta_)),
      eta(eta_), residual(residual_) {}

double eta_residual(double alpha, const Settings &settings, double eta) {
    const ComplexMatrix rho = pure_state(alpha).matrix();
    const HardwareParams ideal_cell{std::numbers::pi, eta};
    const ProjectorPair target = projectors(observable(settings.phi0));
    const ProjectorPair realized = projectors(effective_observable(settings.phi1, ideal_cell, true));
    double sum = 0.0;
    for (double theta : {settings.theta0, settings.theta1}) {
        const ProjectorPair alice = projectors(observable(theta));
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const double lhs = trace_of_product(tensor(alice[a], target[b]), rho).real();
                const double rhs = trace_of_product(tensor(alice[a], realized[b]), rho).real();
                sum += (lhs - rhs) * (lhs - rhs);
            }
        }
    }
    return sum;
}

EtaSolution solve_eta(double alpha, const Settings &settings) {
    settings.validate();
    (void)pure_state(alpha); // validates alpha
    constexpr double kStep = 1e-3;
    constexpr double kRefineTol = 1e-10;
    const double half_pi = std::numbers::pi / 2;
    const auto steps = static_cast<long>(std::floor(half_pi / kStep));

    // Symmetric grid around 0 so that eta = 0 is sampled exactly; the endpoints are added.
    std::vector<double> grid;
    grid.push_back(-half_pi);
    for (long k = -steps; k <= steps; ++k) {
        grid.push_back(static_cast<double>(k) * kStep);
    }
    grid.push_back(half_pi);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = eta_residual(alpha, settings, grid[i]);
    }

    auto better = [](const EtaSolution &cand, const EtaSolution &best) {
        constexpr double kTie = 1e-15;
        if (cand.residual < best.residual - kTie) {
            return true;
        }
        if (cand.residual > best.residual + kTie) {
            return false;
        }
        if (std::abs(cand.eta) != std::abs(best.eta)) {
            return std::abs(cand.eta) < std::abs(best.eta);
        }
        return cand.eta > best.eta;
    };

    EtaSolution best{grid.front(), values.front()};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const bool left_ok = i == 0 || values[i] <= values[i - 1];
        const bool right_ok = i + 1 == grid.size() || values[i] <= values[i + 1];
        if (!left_ok || !right_ok) {
            continue;
        }
        EtaSolution cand{grid[i], values[i]};
        const double lo = i == 0 ? grid[i] : grid[i - 1];
        const double hi = i + 1 == grid.size() ? grid[i] : grid[i + 1];
        if (cand.residual > 0.0 && hi > lo) {
            const auto refined = golden_section_minimize(
                [&](double eta) { return eta_residual(alpha, settings, eta); }, lo, hi, kRefineTol);
            if (refined.value < cand.residual) {
                cand = {refined.x, refined.value};
            }
        }
        if (better(cand, best)) {
            best = cand;
        }
    }
    if (!(best.residual < kEtaResidualTolerance)) {
        throw EtaSolveError(best.eta, best.residual);
    }
    return best;
}

} // namespace qcausal
