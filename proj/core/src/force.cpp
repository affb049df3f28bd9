#include "optforce/force.hpp"

#include "optforce/error.hpp"

#include <cmath>
#include <sstream>

namespace optforce {

ForceResult force_from_state(const BlochState& state, const DriveParams& drive) {
    check_drive(drive);
    ForceResult out;
    if (drive.omega == 0.0) {
        out.diagnostics.imag_residue = 0.0;
        return out;
    }
    const cplx f = cplx(0.0, -1.0) * drive.omega * (state.rp - state.rm);
    out.f = f.real();
    out.diagnostics.imag_residue = f.imag();
    if (std::abs(f.imag()) > 1e-9 * std::abs(f.real()) + 1e-12) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "force_from_state: imaginary force component " << f.imag()
            << " (state is not conjugate-symmetric)";
        throw NonHermitianState(msg.str());
    }
    return out;
}

ForceResult force_closed_form(const DriveParams& drive, const ReservoirRates& rates) {
    check_drive(drive);
    ForceResult out;
    if (drive.omega == 0.0) {
        out.diagnostics.numerator = 0.0;
        return out;
    }
    const DressedFrame fr = dressed_frame(drive);
    const DerivedRates d = derived_rates(rates, fr);

    const double numerator = 2.0 * d.gamma_bar * drive.omega * fr.omega_bar * fr.sin_2theta;
    const double denominator =
        4.0 * d.gamma_p * fr.omega_bar * fr.omega_bar +
        d.gamma_1 * (d.gamma_2 * d.gamma_p -
                     rates.gamma0() * d.gamma_tilde * fr.sin_2theta * fr.sin_4theta / 4.0);

    auto& diag = out.diagnostics;
    diag.gamma_p = d.gamma_p;
    diag.gamma_bar = d.gamma_bar;
    diag.gamma_1 = d.gamma_1;
    diag.gamma_2 = d.gamma_2;
    diag.gamma_tilde = d.gamma_tilde;
    diag.omega_bar = fr.omega_bar;
    diag.sin_2theta = fr.sin_2theta;
    diag.numerator = numerator;
    diag.denominator = denominator;

    if (!(denominator > 1e-300)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "force_closed_form: denominator " << denominator << " is not above 1e-300 (omega="
            << drive.omega << ", delta=" << drive.delta << ", gamma0=" << rates.gamma0()
            << ", gamma_plus=" << rates.gamma_plus() << ", gamma_minus=" << rates.gamma_minus()
            << ")";
        throw DegenerateDenominator(msg.str());
    }
    out.f = numerator / denominator;
    return out;
}

ForceResult force_free_space(double omega, double delta, double gamma) {
    if (!(gamma > 0.0)) {
        throw DomainError("force_free_space: gamma must be > 0");
    }
    const double omega_sq = omega * omega;
    ForceResult out;
    out.diagnostics.numerator = 2.0 * gamma * omega_sq;
    out.diagnostics.denominator = delta * delta + gamma * gamma + 2.0 * omega_sq;
    out.f = out.diagnostics.numerator / out.diagnostics.denominator;
    return out;
}

ForceResult force_saturated_modified(const ReservoirRates& rates) {
    const double g0 = rates.gamma0();
    const double gp = rates.gamma_plus();
    const double gm = rates.gamma_minus();
    ForceResult out;
    out.f = g0 * (0.5 + gp * gm / (g0 * (gp + gm)));
    return out;
}

ForceResult force_intense_free_space(double x, IntenseMode mode) {
    if (!(x >= 0.0) || x >= 1.0) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "force_intense_free_space: sideband ratio " << x << " outside [0, 1)";
        throw OutOfBand(msg.str());
    }
    ForceResult out;
    const double x2 = x * x;
    if (mode == IntenseMode::quadratic) {
        out.f = 1.0 - 3.0 * x2;
    } else {
        const double one_minus = 1.0 - x2;
        out.f = 0.5 + one_minus * one_minus * one_minus / (2.0 * (1.0 + 3.0 * x2));
    }
    return out;
}

double bare_inversion(const BlochState& state, const DressedFrame& frame) {
    return 0.5 * (frame.cos_2theta * state.w.real() - frame.sin_2theta * state.u());
}

}  // namespace optforce
