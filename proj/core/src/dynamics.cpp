#include "optforce/dynamics.hpp"

#include "optforce/error.hpp"
#include "optforce/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace optforce {

namespace {

constexpr double max_condition = 1e14;

void check_tol(double tol) {
    if (!(tol >= 1e-12 && tol <= 1e-3)) {
        throw DomainError("evolve: tol must lie in [1e-12, 1e-3]");
    }
}

ode::Options options_for(double tol) {
    ode::Options opt;
    opt.rtol = tol;
    opt.atol = tol;
    return opt;
}

}  // namespace

double conjugation_residue(const BlochState& s) {
    return std::max(std::abs(s.rm - std::conj(s.rp)), std::abs(s.w.imag()));
}

linalg::Vector<cplx, 3> AffineGenerator::rhs(const linalg::Vector<cplx, 3>& x) const {
    auto y = linalg::multiply(A, x);
    for (std::size_t i = 0; i < 3; ++i) y[i] += b[i];
    return y;
}

AffineGenerator generator(const ReservoirRates& rates, const DressedFrame& frame) {
    const DerivedRates d = derived_rates(rates, frame);
    const double g0 = rates.gamma0();
    const double sin2t_sq = frame.sin_2theta * frame.sin_2theta;
    const double damping = g0 * sin2t_sq + d.gamma_p;
    const double cross = -(rates.gamma_plus() + rates.gamma_minus()) * sin2t_sq / 4.0;
    const double w_feed = frame.sin_2theta * d.gamma_tilde / 2.0;
    const cplx rotation(0.0, 2.0 * frame.omega_bar);

    AffineGenerator gen{.derived = d, .rates = rates, .frame = frame};
    // d<R_z>/dt
    gen.A[0] = {cplx(-2.0 * d.gamma_p), cplx(g0 * frame.sin_4theta / 2.0),
                cplx(g0 * frame.sin_4theta / 2.0)};
    gen.b[0] = cplx(-2.0 * d.gamma_m);
    // d<R+>/dt
    gen.A[1] = {cplx(w_feed), rotation - damping, cplx(cross)};
    gen.b[1] = cplx(d.gamma_f);
    // d<R->/dt
    gen.A[2] = {cplx(w_feed), cplx(cross), -rotation - damping};
    gen.b[2] = cplx(d.gamma_f);
    return gen;
}

RealGenerator real_generator(const ReservoirRates& rates, const DressedFrame& frame) {
    // With rp = (u + i v)/2, rm = (u - i v)/2:
    //   w' = -2 gp w + g0 sin4t/2 u - 2 gm
    //   u' = sin2t gt w - (a + c) u - 2 Ob v + 2 gf
    //   v' = 2 Ob u - (a - c) v
    // where a = g0 sin^2 2t + gp and c = (g+ + g-) sin^2 2t / 4.
    const DerivedRates d = derived_rates(rates, frame);
    const double sin2t_sq = frame.sin_2theta * frame.sin_2theta;
    const double a = rates.gamma0() * sin2t_sq + d.gamma_p;
    const double c = (rates.gamma_plus() + rates.gamma_minus()) * sin2t_sq / 4.0;
    const double ob2 = 2.0 * frame.omega_bar;

    RealGenerator gen;
    gen.A[0] = {-2.0 * d.gamma_p, rates.gamma0() * frame.sin_4theta / 2.0, 0.0};
    gen.A[1] = {frame.sin_2theta * d.gamma_tilde, -(a + c), -ob2};
    gen.A[2] = {0.0, ob2, -(a - c)};
    gen.b = {-2.0 * d.gamma_m, 2.0 * d.gamma_f, 0.0};
    return gen;
}

std::vector<double> uniform_times(double t0, double t1, std::size_t n) {
    if (n < 2 || !(t1 > t0)) {
        throw DomainError("uniform_times: need n >= 2 and t1 > t0");
    }
    std::vector<double> ts(n);
    const double span = t1 - t0;
    for (std::size_t i = 0; i < n; ++i) {
        ts[i] = t0 + span * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    ts.back() = t1;
    return ts;
}

std::vector<BlochState> evolve(const AffineGenerator& gen, const BlochState& x0,
                               std::span<const double> sample_times, double tol) {
    check_tol(tol);
    if (sample_times.empty() || !(sample_times.back() > x0.t)) {
        throw DomainError("evolve: t_final must be later than the initial time");
    }
    const linalg::Vector<cplx, 3> y0{x0.w, x0.rp, x0.rm};
    auto rhs = [&gen](double, const linalg::Vector<cplx, 3>& x) { return gen.rhs(x); };
    const auto ys = ode::integrate(rhs, y0, x0.t, sample_times, options_for(tol));

    std::vector<BlochState> out;
    out.reserve(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        out.push_back({ys[i][0], ys[i][1], ys[i][2], sample_times[i]});
    }
    return out;
}

std::vector<std::array<double, 3>> evolve_real(const RealGenerator& gen,
                                               const std::array<double, 3>& x0, double t0,
                                               std::span<const double> sample_times,
                                               double tol) {
    check_tol(tol);
    auto rhs = [&gen](double, const linalg::Vector<double, 3>& x) {
        auto y = linalg::multiply(gen.A, x);
        for (std::size_t i = 0; i < 3; ++i) y[i] += gen.b[i];
        return y;
    };
    return ode::integrate(rhs, x0, t0, sample_times, options_for(tol));
}

BlochState steady_state(const AffineGenerator& gen) {
    const double cond = linalg::condition1(gen.A);
    auto report = [&gen](const char* what, double value) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "steady_state: " << what << " " << value << " (gamma0=" << gen.rates.gamma0()
            << ", gamma_plus=" << gen.rates.gamma_plus()
            << ", gamma_minus=" << gen.rates.gamma_minus()
            << ", omega_bar=" << gen.frame.omega_bar << ", sin2theta=" << gen.frame.sin_2theta
            << ")";
        return SingularGenerator(msg.str());
    };
    if (!(cond <= max_condition)) {
        throw report("generator condition number", cond);
    }
    linalg::Vector<cplx, 3> minus_b{-gen.b[0], -gen.b[1], -gen.b[2]};
    const auto x = linalg::solve(gen.A, minus_b);
    if (!x) {
        throw report("zero pivot, condition number", cond);
    }
    const auto r = gen.rhs(*x);
    const double residual = linalg::norm_inf(r);
    const double bound =
        1e-12 * (linalg::norm1(gen.A) * linalg::norm_inf(*x) + linalg::norm_inf(gen.b));
    if (residual > bound) {
        throw report("residual", residual);
    }
    return {(*x)[0], (*x)[1], (*x)[2], std::numeric_limits<double>::infinity()};
}

}  // namespace optforce
