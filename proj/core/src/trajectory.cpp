#include "optforce/trajectory.hpp"

#include "optforce/error.hpp"
#include "optforce/integrator.hpp"

#include <array>
#include <cmath>

namespace optforce {

ForceResult velocity_force(double v, const DriveParams& drive, const ReservoirRates& rates) {
    DriveParams shifted = drive;
    shifted.delta = drive.delta - drive.k_L * v;
    return force_closed_form(shifted, rates);
}

TrajectoryResult simulate_trajectory(const AtomKinematics& start, const DriveParams& drive,
                                     const ReservoirRates& rates,
                                     std::span<const double> sample_times,
                                     const TrajectoryOptions& options) {
    check_drive(drive);
    if (!(start.epsilon > 0.0)) {
        throw DomainError("simulate_trajectory: epsilon must be > 0");
    }
    if (!(options.tol >= 1e-12 && options.tol <= 1e-3)) {
        throw DomainError("simulate_trajectory: tol must lie in [1e-12, 1e-3]");
    }
    if (sample_times.empty() || !(sample_times.back() > start.t)) {
        throw DomainError("simulate_trajectory: t_final must be later than the start time");
    }

    auto force_at = [&](double t, double v) {
        DriveParams d = drive;
        d.delta = drive.delta + options.chirp * t;
        return velocity_force(v, d, rates).f;
    };
    const double eps = start.epsilon;
    // y = (z, v, work)
    auto rhs = [&](double t, const std::array<double, 3>& y) {
        const double a = eps * force_at(t, y[1]);
        return std::array<double, 3>{y[1], a, a * y[1]};
    };

    ode::Options opt;
    opt.rtol = options.tol;
    opt.atol = options.tol;
    const auto ys = ode::integrate(rhs, std::array<double, 3>{start.z, start.v, 0.0}, start.t,
                                   sample_times, opt);

    TrajectoryResult out;
    out.samples.reserve(ys.size());
    out.force.reserve(ys.size());
    out.work.reserve(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        out.samples.push_back({ys[i][1], ys[i][0], eps, sample_times[i]});
        out.force.push_back(force_at(sample_times[i], ys[i][1]));
        out.work.push_back(ys[i][2]);
    }
    return out;
}

}  // namespace optforce
