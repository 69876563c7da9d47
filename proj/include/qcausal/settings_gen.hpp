#pragma once

/**
 * @file settings_gen.hpp
 * The two measurement-setting families.
 *
 * MS1: theta1 = -pi/2, phi1 = -phi0, theta0 fixed analytically from (alpha, phi0),
 *      phi0 optimized numerically. qACE vanishes by construction.
 * MS2: angles linear in (alpha - pi/8) for alpha in [pi/8, pi/4].
 */

#include <optional>
#include <string_view>
#include <vector>

#include "qcausal/measurement.hpp"
#include "qcausal/states.hpp"

namespace qcausal {

enum class Family { MS1, MS2 };

Family parse_family(std::string_view name);
std::string_view to_string(Family f);

struct SweepSpec {
    Family family = Family::MS1;
    std::vector<double> alpha_grid;
    std::optional<NoiseParams> noise;
    /// Only delta is used; eta is solved per alpha.
    std::optional<HardwareParams> hardware;
    /// Fixed phi0 for MS1 instead of the per-alpha optimum.
    std::optional<double> phi0;

    void validate() const;
};

struct Ms1Settings {
    Settings settings;
    /// sin(2 alpha) sin(phi0) == 0: theta0 was set to 0.
    bool degenerate = false;
};

Ms1Settings ms1(double alpha, double phi0);

/// Ideal (pure state, no hardware) MS1 violation gap cace_lb - qace.
double ms1_gap(double alpha, double phi0);

/// phi0 in (0, pi/2) maximizing ms1_gap(alpha, .): 200-point scan plus golden section.
double ms1_optimal_phi0(double alpha);

struct MaxViolation {
    double alpha;
    double phi0;
    double gap;
};

/// Global maximum of the MS1 gap over alpha in (0, pi/2) and phi0 in (0, pi/2).
MaxViolation ms1_max_violation();

/// Closed form of the maximizing alpha: 2 alpha = atan(1/sqrt(3 sqrt2 + 2)) + atan(sqrt((3 sqrt2 + 2)/2)).
double ms1_optimal_alpha_closed_form();

Settings ms2(double alpha);

/// Settings of the family at alpha; MS1 uses `phi0` or the optimal phi0.
Settings family_settings(Family family, double alpha, std::optional<double> phi0 = std::nullopt);

/// Attaches a Pockels cell with phase `delta`, rotated by the eta that realizes
/// N^0 under ideal (delta = pi) operation. See solve_eta.
Settings with_hardware(Settings s, double alpha, double delta);

} // namespace qcausal
