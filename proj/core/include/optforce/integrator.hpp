#pragma once

// Dormand-Prince 5(4) for small fixed-size systems. State is std::array of
// double or std::complex<double>; the right-hand side is f(t, y) -> dy/dt.

#include "optforce/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <sstream>
#include <vector>

namespace optforce::ode {

struct Options {
    double rtol = 1e-10;
    double atol = 1e-10;
    double h_min = 1e-12;  // StepFailure below this
    double h_init = 0.0;   // 0 picks a starting step from the first derivative
    std::size_t max_steps = 50'000'000;
};

namespace detail {

template <class T, std::size_t N>
using Vec = std::array<T, N>;

// y + h * sum_i coef_i k_i
template <class T, std::size_t N, std::size_t M>
Vec<T, N> combine(const Vec<T, N>& y, double h, const std::array<double, M>& coef,
                  const std::array<const Vec<T, N>*, M>& k) {
    Vec<T, N> out = y;
    for (std::size_t j = 0; j < M; ++j) {
        if (coef[j] == 0.0) continue;
        const double hc = h * coef[j];
        for (std::size_t i = 0; i < N; ++i) out[i] += hc * (*k[j])[i];
    }
    return out;
}

namespace dp {
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr std::array<double, 1> a2{1.0 / 5};
inline constexpr std::array<double, 2> a3{3.0 / 40, 9.0 / 40};
inline constexpr std::array<double, 3> a4{44.0 / 45, -56.0 / 15, 32.0 / 9};
inline constexpr std::array<double, 4> a5{19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561,
                                          -212.0 / 729};
inline constexpr std::array<double, 5> a6{9017.0 / 3168, -355.0 / 33, 46732.0 / 5247,
                                          49.0 / 176, -5103.0 / 18656};
inline constexpr std::array<double, 6> b{35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192,
                                         -2187.0 / 6784, 11.0 / 84};
// fifth-order minus embedded fourth-order weights
inline constexpr std::array<double, 7> e{71.0 / 57600,  0.0,          -71.0 / 16695, 71.0 / 1920,
                                         -17253.0 / 339200, 22.0 / 525, -1.0 / 40};
}  // namespace dp

template <class T, std::size_t N>
struct StepOut {
    Vec<T, N> y;
    Vec<T, N> k_end;  // f(t+h, y), reused as the next k1
    Vec<T, N> err;
};

template <class T, std::size_t N, class Rhs>
StepOut<T, N> dp_step(Rhs& f, double t, const Vec<T, N>& y, const Vec<T, N>& k1, double h) {
    using namespace dp;
    const auto k2 = f(t + c2 * h, combine<T, N, 1>(y, h, a2, {&k1}));
    const auto k3 = f(t + c3 * h, combine<T, N, 2>(y, h, a3, {&k1, &k2}));
    const auto k4 = f(t + c4 * h, combine<T, N, 3>(y, h, a4, {&k1, &k2, &k3}));
    const auto k5 = f(t + c5 * h, combine<T, N, 4>(y, h, a5, {&k1, &k2, &k3, &k4}));
    const auto k6 = f(t + h, combine<T, N, 5>(y, h, a6, {&k1, &k2, &k3, &k4, &k5}));
    StepOut<T, N> out;
    out.y = combine<T, N, 6>(y, h, b, {&k1, &k2, &k3, &k4, &k5, &k6});
    out.k_end = f(t + h, out.y);
    Vec<T, N> zero{};
    out.err = combine<T, N, 7>(zero, h, e, {&k1, &k2, &k3, &k4, &k5, &k6, &out.k_end});
    return out;
}

template <class T, std::size_t N>
double error_norm(const Vec<T, N>& err, const Vec<T, N>& y0, const Vec<T, N>& y1,
                  const Options& opt) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double scale =
            opt.atol + opt.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        worst = std::max(worst, std::abs(err[i]) / scale);
    }
    return worst;
}

template <class T, std::size_t N>
bool all_finite(const Vec<T, N>& y) {
    for (const auto& v : y) {
        if (!std::isfinite(std::abs(v))) return false;
    }
    return true;
}

}  // namespace detail

/// Adaptive integration from (t0, y0), returning the state at each of
/// `sample_times` (nondecreasing, all >= t0). Steps are shortened to land
/// exactly on each sample time.
template <class T, std::size_t N, class Rhs>
std::vector<std::array<T, N>> integrate(Rhs f, std::array<T, N> y, double t0,
                                        std::span<const double> sample_times,
                                        const Options& opt = {}) {
    std::vector<std::array<T, N>> out;
    out.reserve(sample_times.size());
    if (!std::is_sorted(sample_times.begin(), sample_times.end()) ||
        (!sample_times.empty() && sample_times.front() < t0)) {
        throw DomainError("integrate: sample times must be nondecreasing and >= t0");
    }

    double t = t0;
    auto k1 = f(t, y);
    double h = opt.h_init;
    if (h <= 0.0) {
        double d0 = 0.0;
        double d1 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double scale = opt.atol + opt.rtol * std::abs(y[i]);
            d0 = std::max(d0, std::abs(y[i]) / scale);
            d1 = std::max(d1, std::abs(k1[i]) / scale);
        }
        h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
        h = std::max(h, 10.0 * opt.h_min);
    }

    std::size_t steps = 0;
    for (double target : sample_times) {
        while (t < target) {
            const double remaining = target - t;
            const bool last = h >= remaining;
            const double h_try = last ? remaining : h;
            auto s = detail::dp_step(f, t, y, k1, h_try);
            const double err = detail::error_norm(s.err, y, s.y, opt);
            if (!std::isfinite(err) || !detail::all_finite(s.y)) {
                h = 0.25 * h_try;
            } else if (err <= 1.0) {
                t = last ? target : t + h_try;
                y = s.y;
                k1 = s.k_end;
                const double grow =
                    err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
                // a short final step must not shrink the regular step length
                h = last ? std::max(h, h_try * grow) : h_try * grow;
            } else {
                h = h_try * std::max(0.2, 0.9 * std::pow(err, -0.2));
            }
            if (h < opt.h_min && t < target) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "integrate: step size " << h << " fell below floor " << opt.h_min
                    << " at t = " << t;
                throw StepFailure(msg.str());
            }
            if (++steps > opt.max_steps) {
                throw StepFailure("integrate: exceeded maximum number of steps");
            }
        }
        out.push_back(y);
    }
    return out;
}

/// Fixed-step integration with the fifth-order Dormand-Prince solution. Used
/// to measure convergence order.
template <class T, std::size_t N, class Rhs>
std::array<T, N> integrate_fixed(Rhs f, std::array<T, N> y, double t0, double t1,
                                 std::size_t steps) {
    if (steps == 0) throw DomainError("integrate_fixed: need at least one step");
    const double h = (t1 - t0) / static_cast<double>(steps);
    auto k1 = f(t0, y);
    for (std::size_t n = 0; n < steps; ++n) {
        const double t = t0 + static_cast<double>(n) * h;
        auto s = detail::dp_step(f, t, y, k1, h);
        y = s.y;
        k1 = s.k_end;
    }
    return y;
}

}  // namespace optforce::ode
