#pragma once

#include <optional>

namespace optforce {

// Natural units throughout: rates and frequencies in units of gamma0, time in
// 1/gamma0, forces in hbar*k_L*gamma0. Note that gamma here is the rate that
// appears in the dressed equations of motion; the upper-level spontaneous
// decay rate is 2*gamma.

/// Laser drive: Rabi frequency, detuning delta = omega_0 - omega_L, and the
/// optional carrier frequency needed only by frequency-dependent reservoirs.
struct DriveParams {
    double omega = 0.0;
    double delta = 0.0;
    std::optional<double> omega_L;
    double k_L = 1.0;

    bool operator==(const DriveParams&) const = default;
};

/// Dressed-state mixing quantities. The angle itself is never stored.
struct DressedFrame {
    double omega_bar = 0.0;   // sqrt(omega^2 + (delta/2)^2)
    double cos2_theta = 0.0;  // cos^2(theta)
    double sin2_theta = 0.0;  // sin^2(theta)
    double sin_2theta = 0.0;  // sin(2 theta) = omega / omega_bar
    double cos_2theta = 0.0;  // cos(2 theta) = (delta/2) / omega_bar
    double sin_4theta = 0.0;  // 2 sin(2 theta) cos(2 theta)
};

// Throws DomainError for negative/non-finite omega or non-positive omega_L.
void check_drive(const DriveParams& drive);

// Throws ZeroDrive when omega == 0.
DressedFrame dressed_frame(const DriveParams& drive);

}  // namespace optforce
