#pragma once

#include "optforce/drive.hpp"
#include "optforce/linalg.hpp"
#include "optforce/reservoir.hpp"

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace optforce {

using cplx = std::complex<double>;

/// Dressed-state expectation values <R_z>, <R+>, <R-> at time t. w is kept
/// complex so that conjugation/realness residues stay observable.
struct BlochState {
    cplx w{-1.0, 0.0};
    cplx rp{0.0, 0.0};
    cplx rm{0.0, 0.0};
    double t = 0.0;

    // u = <R+ + R->, v = -i(<R+> - <R->)
    double u() const { return (rp + rm).real(); }
    double v() const { return (cplx(0.0, -1.0) * (rp - rm)).real(); }

    static BlochState dressed_ground() { return {}; }
    static BlochState from_real(double w, double u, double v, double t = 0.0) {
        return {cplx(w, 0.0), cplx(0.5 * u, 0.5 * v), cplx(0.5 * u, -0.5 * v), t};
    }
};

/// Largest violation of rm = conj(rp) and Im w = 0.
double conjugation_residue(const BlochState& s);

/// d/dt x = A x + b over x = (w, rp, rm): the dressed equations of motion.
struct AffineGenerator {
    linalg::Matrix<cplx, 3> A{};
    linalg::Vector<cplx, 3> b{};
    DerivedRates derived;
    ReservoirRates rates;
    DressedFrame frame;

    linalg::Vector<cplx, 3> rhs(const linalg::Vector<cplx, 3>& x) const;
};

AffineGenerator generator(const ReservoirRates& rates, const DressedFrame& frame);

/// The same dynamics over the real triple (w, u, v).
struct RealGenerator {
    linalg::Matrix<double, 3> A{};
    linalg::Vector<double, 3> b{};
};

// Built from the rates directly, not by transforming AffineGenerator::A.
RealGenerator real_generator(const ReservoirRates& rates, const DressedFrame& frame);

/// n >= 2 evenly spaced times covering [t0, t1] inclusive.
std::vector<double> uniform_times(double t0, double t1, std::size_t n);

// Integrates from x0 (starting at x0.t) and returns the state at each sample
// time. tol is the relative (and absolute) local error target, in [1e-12, 1e-3].
std::vector<BlochState> evolve(const AffineGenerator& gen, const BlochState& x0,
                               std::span<const double> sample_times, double tol = 1e-10);

// Real-form counterpart of evolve; returns (w, u, v) per sample.
std::vector<std::array<double, 3>> evolve_real(const RealGenerator& gen,
                                               const std::array<double, 3>& x0, double t0,
                                               std::span<const double> sample_times,
                                               double tol = 1e-10);

/// Fixed point of the generator by direct 3x3 elimination. Throws
/// SingularGenerator when cond1(A) > 1e14 or the residual check fails.
BlochState steady_state(const AffineGenerator& gen);

}  // namespace optforce
