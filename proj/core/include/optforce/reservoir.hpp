#pragma once

#include "optforce/drive.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace optforce {

/// Mode-density weight g(omega), frequency in units of gamma0.
using ModeDensity = std::function<double(double)>;

class ReservoirModel {
public:
    enum class Kind { flat, free_space_cubic, custom };

    static ReservoirModel flat() { return ReservoirModel(Kind::flat, {}); }
    static ReservoirModel free_space_cubic() { return ReservoirModel(Kind::free_space_cubic, {}); }
    // g need not be normalized; rates use g(w)/g(omega_L).
    static ReservoirModel custom(ModeDensity g);

    Kind kind() const noexcept { return kind_; }
    const ModeDensity& density() const noexcept { return g_; }

private:
    ReservoirModel(Kind kind, ModeDensity g) : kind_(kind), g_(std::move(g)) {}

    Kind kind_;
    ModeDensity g_;
};

/// Decay rates on the three dressed transitions: carrier and the two Mollow
/// sidebands at omega_L +/- 2 omega_bar. All strictly positive.
class ReservoirRates {
public:
    // Throws InvalidRates unless all three are finite and > 0.
    ReservoirRates(double gamma0, double gamma_plus, double gamma_minus);

    static ReservoirRates equal(double gamma = 1.0) { return {gamma, gamma, gamma}; }

    double gamma0() const noexcept { return gamma0_; }
    double gamma_plus() const noexcept { return gamma_plus_; }
    double gamma_minus() const noexcept { return gamma_minus_; }

    bool operator==(const ReservoirRates&) const = default;

private:
    double gamma0_;
    double gamma_plus_;
    double gamma_minus_;
};

/// Composite rates entering the dressed equations of motion and the force.
struct DerivedRates {
    double gamma_p = 0.0;      // g+ cos^4 + g- sin^4
    double gamma_m = 0.0;      // g+ cos^4 - g- sin^4
    double gamma_f = 0.0;      // sin2t (g0 + g+ cos^2 + g- sin^2) / 2
    double gamma_bar = 0.0;    // g+ cos^4 (g0 + 2 g- sin^2) + g- sin^4 (g0 + 2 g+ cos^2)
    double gamma_1 = 0.0;      // g0 sin^2 2t + gamma_tilde cos2t
    double gamma_2 = 0.0;      // g0 sin^2 2t + g+ cos^2 + g- sin^2
    double gamma_tilde = 0.0;  // g+ cos^2 - g- sin^2
};

// flat: (g0, g0, g0). free_space_cubic: g0 (1 +/- 2 omega_bar/omega_L)^3.
// custom: g0 g(w)/g(omega_L) at w = omega_L, omega_L +/- 2 omega_bar.
// Throws SidebandOutOfBand when 2 omega_bar >= omega_L for the
// frequency-dependent models, DomainError when omega_L is missing.
ReservoirRates reservoir_rates(const ReservoirModel& model, const DressedFrame& frame,
                               const DriveParams& drive, double gamma0 = 1.0);

DerivedRates derived_rates(const ReservoirRates& rates, const DressedFrame& frame);

/// Free-space spontaneous rate 2 d^2 omega^3 / (3 hbar c^3) in Gaussian units:
/// dipole in statC*cm, omega in rad/s, result in 1/s.
double free_space_gamma(double dipole, double omega);

namespace cgs {
inline constexpr double hbar = 1.054571817e-27;          // erg s
inline constexpr double speed_of_light = 2.99792458e10;  // cm/s
}  // namespace cgs

// Piecewise-linear g through (frequency, weight) points sorted by frequency.
// Evaluation outside the tabulated range throws SidebandOutOfBand.
ModeDensity tabulated_mode_density(std::vector<std::pair<double, double>> points);

// Reads two-column "frequency weight" rows (whitespace or comma separated,
// '#' comments). Throws DomainError on malformed rows.
std::vector<std::pair<double, double>> read_mode_density_table(std::istream& in);

/// Lorentzian cavity profile centred on `center` with half width `half_width`,
/// on top of a constant background weight.
ModeDensity lorentzian_mode_density(double center, double half_width, double peak = 1.0,
                                    double background = 0.0);

}  // namespace optforce
