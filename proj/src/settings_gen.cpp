#include "qcausal/settings_gen.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcausal/causal.hpp"
#include "qcausal/error.hpp"
#include "qcausal/optimize.hpp"

namespace qcausal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMs2Slack = 1e-12;
constexpr std::size_t kPhiScanPoints = 200;
constexpr double kPhiTolerance = 1e-8;
// Interior margin keeping the arccot argument finite during the phi0 search.
constexpr double kPhiMargin = 1e-9;

} // namespace

Family parse_family(std::string_view name) {
    if (name == "ms1" || name == "MS1") {
        return Family::MS1;
    }
    if (name == "ms2" || name == "MS2") {
        return Family::MS2;
    }
    throw InputError("unknown family '" + std::string(name) + "' (expected ms1 or ms2)");
}

std::string_view to_string(Family f) { return f == Family::MS1 ? "ms1" : "ms2"; }

void SweepSpec::validate() const {
    if (alpha_grid.empty()) {
        throw InputError("sweep: alpha grid is empty");
    }
    for (double alpha : alpha_grid) {
        if (family == Family::MS2) {
            if (!(alpha >= kPi / 8 - kMs2Slack && alpha <= kPi / 4 + kMs2Slack)) {
                throw InputError("sweep: MS2 requires alpha in [pi/8, pi/4], got " +
                                 std::to_string(alpha));
            }
        } else if (!(alpha >= 0.0 && alpha <= kPi / 2)) {
            throw InputError("sweep: MS1 requires alpha in [0, pi/2], got " + std::to_string(alpha));
        }
    }
    if (noise) {
        noise->validate();
    }
    if (hardware) {
        hardware->validate();
    }
    if (phi0 && !std::isfinite(*phi0)) {
        throw InputError("sweep: phi0 must be finite");
    }
}

Ms1Settings ms1(double alpha, double phi0) {
    if (!std::isfinite(alpha) || !std::isfinite(phi0)) {
        throw InputError("ms1: angles must be finite");
    }
    Ms1Settings out;
    out.settings.theta1 = -kPi / 2;
    out.settings.phi0 = phi0;
    out.settings.phi1 = -phi0;
    const double denom = std::sin(2 * alpha) * std::sin(phi0);
    if (denom == 0.0) {
        out.degenerate = true;
        out.settings.theta0 = 0.0;
        return out;
    }
    // arccot on the branch (0, pi).
    const double y = (std::cos(2 * alpha) + 3 * std::cos(phi0)) / denom;
    out.settings.theta0 = kPi / 2 - std::atan(y);
    return out;
}

double ms1_gap(double alpha, double phi0) {
    return report(pure_state(alpha), ms1(alpha, phi0).settings).gap;
}

double ms1_optimal_phi0(double alpha) {
    if (!(alpha > 0.0 && alpha < kPi / 2)) {
        throw InputError("ms1_optimal_phi0: alpha must lie in (0, pi/2), got " +
                         std::to_string(alpha));
    }
    const auto best = scan_and_maximize([alpha](double phi0) { return ms1_gap(alpha, phi0); },
                                        kPhiMargin, kPi / 2 - kPhiMargin, kPhiScanPoints,
                                        kPhiTolerance);
    return best.x;
}

MaxViolation ms1_max_violation() {
    constexpr double kAlphaTolerance = 1e-9;
    auto profile = [](double alpha) { return ms1_gap(alpha, ms1_optimal_phi0(alpha)); };
    const auto best = scan_and_maximize(profile, 1e-3, kPi / 2 - 1e-3, kPhiScanPoints,
                                        kAlphaTolerance);
    const double phi0 = ms1_optimal_phi0(best.x);
    return {best.x, phi0, ms1_gap(best.x, phi0)};
}

double ms1_optimal_alpha_closed_form() {
    const double s = 3 * std::numbers::sqrt2 + 2;
    return 0.5 * (std::atan(1 / std::sqrt(s)) + std::atan(std::sqrt(s / 2)));
}

Settings ms2(double alpha) {
    if (!(alpha >= kPi / 8 - kMs2Slack && alpha <= kPi / 4 + kMs2Slack)) {
        throw InputError("ms2: alpha must lie in [pi/8, pi/4], got " + std::to_string(alpha));
    }
    const double u = alpha - kPi / 8;
    Settings s;
    s.theta0 = 3 * u;
    s.theta1 = kPi;
    s.phi0 = 2 * u;
    s.phi1 = kPi - 3 * u;
    return s;
}

Settings family_settings(Family family, double alpha, std::optional<double> phi0) {
    if (family == Family::MS2) {
        return ms2(alpha);
    }
    if (phi0) {
        return ms1(alpha, *phi0).settings;
    }
    if (alpha <= 0.0 || alpha >= kPi / 2) {
        // Product state: no phi0 to optimize; the degenerate limit settings apply.
        return ms1(alpha, 0.0).settings;
    }
    return ms1(alpha, ms1_optimal_phi0(alpha)).settings;
}

Settings with_hardware(Settings s, double alpha, double delta) {
    s.hardware.reset();
    const EtaSolution eta = solve_eta(alpha, s);
    s.hardware = HardwareParams{delta, eta.eta};
    s.hardware->validate();
    return s;
}

} // namespace qcausal
