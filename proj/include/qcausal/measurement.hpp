#pragma once

/**
 * @file measurement.hpp
 * Dichotomic qubit observables, their outcome projectors, and the Jones-matrix
 * model of Bob's switchable measurement (a Pockels cell between rotations).
 *
 * Outcome convention for both parties: outcome 0 <-> eigenvalue +1,
 * outcome 1 <-> eigenvalue -1, so that O = Pi_0 - Pi_1.
 */

#include <optional>
#include <stdexcept>

#include "qcausal/qmath.hpp"

namespace qcausal {

/// Hermitian 2x2 observable with spectrum {+1, -1}.
class Observable {
  public:
    /// Throws InvariantError unless `matrix` is Hermitian with eigenvalues +-1.
    explicit Observable(ComplexMatrix matrix, std::optional<double> angle = std::nullopt);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }
    /// Generating x-z plane angle, when the observable came from one.
    [[nodiscard]] std::optional<double> angle() const noexcept { return angle_; }

  private:
    ComplexMatrix matrix_;
    std::optional<double> angle_;
};

struct ProjectorPair {
    ComplexMatrix pi0;
    ComplexMatrix pi1;

    [[nodiscard]] const ComplexMatrix &operator[](int outcome) const {
        return outcome == 0 ? pi0 : pi1;
    }
};

/// Pockels-cell phase delta in (0, 2pi] and cell rotation eta in [-pi/2, pi/2].
struct HardwareParams {
    double delta;
    double eta = 0.0;

    void validate() const;
};

/**
 * One experiment configuration: Alice's angles theta_x, Bob's angles phi_a.
 *
 * When `hardware` is set, Bob's a=0 observable is produced by the triggered
 * Pockels cell acting on N(phi1) and phi0 is not used directly.
 */
struct Settings {
    double theta0 = 0.0;
    double theta1 = 0.0;
    double phi0 = 0.0;
    double phi1 = 0.0;
    std::optional<HardwareParams> hardware;

    void validate() const;
};

/// cos(angle) sigma_z + sin(angle) sigma_x.
Observable observable(double angle);

/// Pi_o = (I + (-1)^o O) / 2.
ProjectorPair projectors(const Observable &obs);

/// Jones matrix diag(1, e^{i delta}).
ComplexMatrix pockels(double delta);

/// Real rotation [[cos, -sin], [sin, cos]].
ComplexMatrix rotation(double eta);

/**
 * Bob's observable through the (possibly triggered) rotated Pockels cell.
 *
 * Untriggered: observable(base_phi). Triggered: U^dagger N(base_phi) U with
 * U = R(eta) P(delta) R(-eta). For eta = 0, delta = pi this is observable(-base_phi).
 * A sigma_y component appears whenever delta != pi.
 */
Observable effective_observable(double base_phi, const HardwareParams &hw, bool triggered);

struct EtaSolution {
    double eta;
    /// Summed squared residual of the eight trace equations at eta.
    double residual;
};

/// solve_eta could not reach the residual tolerance; carries the best point found.
class EtaSolveError : public std::runtime_error {
  public:
    EtaSolveError(double eta, double residual);
    double eta;
    double residual;
};

/// Residual tolerance for solve_eta.
inline constexpr double kEtaResidualTolerance = 1e-9;

/// Summed squared difference between Tr(M^x_a (x) N^0_b rho) for the ideal N^0 =
/// observable(phi0) and for the cell-realized N(eta) (delta = pi), over all (x, a, b).
double eta_residual(double alpha, const Settings &settings, double eta);

/**
 * Cell rotation eta in [-pi/2, pi/2] that makes the triggered cell (delta = pi)
 * reproduce N^0 = observable(phi0) on pure_state(alpha).
 *
 * Grid scan at 1e-3 rad followed by golden-section refinement of each local
 * minimum. Equivalent minima are resolved towards the smallest |eta|.
 * Throws EtaSolveError if the best residual is not below kEtaResidualTolerance.
 */
EtaSolution solve_eta(double alpha, const Settings &settings);

} // namespace qcausal
