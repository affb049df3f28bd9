#pragma once

#include "optforce/drive.hpp"
#include "optforce/force.hpp"
#include "optforce/reservoir.hpp"

#include <span>
#include <vector>

namespace optforce {

/// Point-particle state along the beam axis. v in gamma0/k_L, z in 1/k_L,
/// epsilon = hbar k_L^2 / (m gamma0) is the recoil parameter.
struct AtomKinematics {
    double v = 0.0;
    double z = 0.0;
    double epsilon = 0.0;
    double t = 0.0;
};

/// Closed-form force seen by an atom moving at v: delta -> delta - k_L v.
ForceResult velocity_force(double v, const DriveParams& drive, const ReservoirRates& rates);

struct TrajectoryOptions {
    double tol = 1e-10;
    // linear detuning sweep: delta(t) = drive.delta + chirp * t
    double chirp = 0.0;
};

struct TrajectoryResult {
    std::vector<AtomKinematics> samples;
    std::vector<double> force;  // force at each sample
    std::vector<double> work;   // epsilon * integral of f dz since the start
};

// Integrates dz/dt = v, dv/dt = epsilon f(v) with the internal state slaved to
// its steady state (valid for epsilon << 1, not enforced). Reservoir rates are
// held fixed along the path.
TrajectoryResult simulate_trajectory(const AtomKinematics& start, const DriveParams& drive,
                                     const ReservoirRates& rates,
                                     std::span<const double> sample_times,
                                     const TrajectoryOptions& options = {});

}  // namespace optforce
