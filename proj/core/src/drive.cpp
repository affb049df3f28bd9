#include "optforce/drive.hpp"

#include "optforce/error.hpp"

#include <cmath>
#include <string>

namespace optforce {

void check_drive(const DriveParams& drive) {
    if (!std::isfinite(drive.omega) || drive.omega < 0.0) {
        throw DomainError("drive: omega must be finite and >= 0, got " + std::to_string(drive.omega));
    }
    if (!std::isfinite(drive.delta)) {
        throw DomainError("drive: delta must be finite");
    }
    if (drive.omega_L && !(std::isfinite(*drive.omega_L) && *drive.omega_L > 0.0)) {
        throw DomainError("drive: omega_L must be > 0 when present");
    }
}

DressedFrame dressed_frame(const DriveParams& drive) {
    check_drive(drive);
    if (drive.omega == 0.0) {
        throw ZeroDrive("dressed_frame: omega = 0 leaves the mixing angle undefined");
    }
    const double half_delta = 0.5 * drive.delta;
    DressedFrame f;
    f.omega_bar = std::hypot(drive.omega, half_delta);
    f.sin_2theta = drive.omega / f.omega_bar;
    f.cos_2theta = half_delta / f.omega_bar;
    f.cos2_theta = 0.5 * (1.0 + f.cos_2theta);
    f.sin2_theta = 0.5 * (1.0 - f.cos_2theta);
    // 1 - cos2t cancels catastrophically for large positive delta; use
    // sin^2 = sin^2(2t) / (4 cos^2) there.
    if (f.cos_2theta > 0.0) {
        f.sin2_theta = 0.25 * f.sin_2theta * f.sin_2theta / f.cos2_theta;
    } else if (f.cos_2theta < 0.0) {
        f.cos2_theta = 0.25 * f.sin_2theta * f.sin_2theta / f.sin2_theta;
    }
    f.sin_4theta = 2.0 * f.sin_2theta * f.cos_2theta;
    return f;
}

}  // namespace optforce
