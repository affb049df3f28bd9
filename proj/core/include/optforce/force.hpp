#pragma once

#include "optforce/drive.hpp"
#include "optforce/dynamics.hpp"
#include "optforce/reservoir.hpp"

#include <limits>

namespace optforce {

/// Intermediates of the closed-form force. Fields not produced by a given
/// route stay NaN.
struct ForceDiagnostics {
    static constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    double gamma_p = nan;
    double gamma_bar = nan;
    double gamma_1 = nan;
    double gamma_2 = nan;
    double gamma_tilde = nan;
    double omega_bar = nan;
    double sin_2theta = nan;
    double numerator = nan;
    double denominator = nan;
    double imag_residue = nan;  // force_from_state only
};

/// Mean force along +k_L in units of hbar k_L gamma0.
struct ForceResult {
    double f = 0.0;
    ForceDiagnostics diagnostics;
};

// f = omega * v. Throws NonHermitianState if the imaginary part of
// -i omega (rp - rm) exceeds 1e-9 |f| + 1e-12.
ForceResult force_from_state(const BlochState& state, const DriveParams& drive);

// The closed-form steady-state force, evaluated in its grouped form:
//   2 gbar omega Ob sin2t / (4 gp Ob^2 + g1 (g2 gp - g0 gt sin2t sin4t / 4)).
// omega == 0 returns 0 without building a frame. Throws DegenerateDenominator
// when the denominator is not safely positive.
ForceResult force_closed_form(const DriveParams& drive, const ReservoirRates& rates);

/// Equal-rate (flat vacuum) force 2 gamma omega^2 / (delta^2 + gamma^2 + 2 omega^2).
ForceResult force_free_space(double omega, double delta, double gamma = 1.0);

/// Strong-drive limit in a modified reservoir:
/// gamma0 (1/2 + g+ g- / (gamma0 (g+ + g-))).
ForceResult force_saturated_modified(const ReservoirRates& rates);

enum class IntenseMode { quadratic, exact };

// Saturated free-space force at sideband ratio x = 2 Ob / omega_L in [0, 1).
// quadratic: 1 - 3x^2; exact: cubic sideband rates through the saturated
// formula, 1/2 + (1 - x^2)^3 / (2 (1 + 3x^2)). Throws OutOfBand for x >= 1.
ForceResult force_intense_free_space(double x, IntenseMode mode);

/// Bare inversion <S_z> = (cos2t w - sin2t u) / 2.
double bare_inversion(const BlochState& state, const DressedFrame& frame);

/// Upper bare level population, 1/2 + <S_z>.
inline double excited_population(const BlochState& state, const DressedFrame& frame) {
    return 0.5 + bare_inversion(state, frame);
}

}  // namespace optforce
