#include "optforce/reservoir.hpp"

#include "optforce/error.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <string>

namespace optforce {

ReservoirModel ReservoirModel::custom(ModeDensity g) {
    if (!g) {
        throw DomainError("custom reservoir: mode density function is empty");
    }
    return ReservoirModel(Kind::custom, std::move(g));
}

ReservoirRates::ReservoirRates(double gamma0, double gamma_plus, double gamma_minus)
    : gamma0_(gamma0), gamma_plus_(gamma_plus), gamma_minus_(gamma_minus) {
    auto ok = [](double g) { return std::isfinite(g) && g > 0.0; };
    if (!ok(gamma0) || !ok(gamma_plus) || !ok(gamma_minus)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "reservoir rates must be finite and > 0, got (gamma0=" << gamma0
            << ", gamma_plus=" << gamma_plus << ", gamma_minus=" << gamma_minus << ")";
        throw InvalidRates(msg.str());
    }
}

ReservoirRates reservoir_rates(const ReservoirModel& model, const DressedFrame& frame,
                               const DriveParams& drive, double gamma0) {
    if (model.kind() == ReservoirModel::Kind::flat) {
        return ReservoirRates::equal(gamma0);
    }
    if (!drive.omega_L) {
        throw DomainError("reservoir_rates: omega_L is required by frequency-dependent reservoirs");
    }
    const double omega_L = *drive.omega_L;
    const double split = 2.0 * frame.omega_bar;
    if (split >= omega_L) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "reservoir_rates: lower sideband omega_L - 2 omega_bar = " << omega_L - split
            << " is not positive";
        throw SidebandOutOfBand(msg.str());
    }

    if (model.kind() == ReservoirModel::Kind::free_space_cubic) {
        const double x = split / omega_L;
        return {gamma0, gamma0 * std::pow(1.0 + x, 3), gamma0 * std::pow(1.0 - x, 3)};
    }

    const auto& g = model.density();
    const double g_carrier = g(omega_L);
    if (!(g_carrier > 0.0)) {
        throw InvalidRates("custom reservoir: g(omega_L) must be > 0");
    }
    const double g_plus = g(omega_L + split);
    const double g_minus = g(omega_L - split);
    if (g_plus < 0.0 || g_minus < 0.0) {
        throw InvalidRates("custom reservoir: mode density is negative at a sideband");
    }
    return {gamma0, gamma0 * g_plus / g_carrier, gamma0 * g_minus / g_carrier};
}

DerivedRates derived_rates(const ReservoirRates& rates, const DressedFrame& frame) {
    const double g0 = rates.gamma0();
    const double gp = rates.gamma_plus();
    const double gm = rates.gamma_minus();
    const double c2 = frame.cos2_theta;
    const double s2 = frame.sin2_theta;
    const double c4 = c2 * c2;
    const double s4 = s2 * s2;
    const double sin2t_sq = frame.sin_2theta * frame.sin_2theta;

    DerivedRates d;
    d.gamma_p = gp * c4 + gm * s4;
    d.gamma_m = gp * c4 - gm * s4;
    d.gamma_f = frame.sin_2theta * (g0 + gp * c2 + gm * s2) / 2.0;
    d.gamma_bar = gp * c4 * (g0 + 2.0 * gm * s2) + gm * s4 * (g0 + 2.0 * gp * c2);
    d.gamma_tilde = gp * c2 - gm * s2;
    d.gamma_1 = g0 * sin2t_sq + d.gamma_tilde * frame.cos_2theta;
    d.gamma_2 = g0 * sin2t_sq + gp * c2 + gm * s2;
    return d;
}

double free_space_gamma(double dipole, double omega) {
    if (!(dipole > 0.0) || !(omega > 0.0)) {
        throw DomainError("free_space_gamma: dipole and omega must be > 0");
    }
    const double c = cgs::speed_of_light;
    return 2.0 * dipole * dipole * omega * omega * omega / (3.0 * cgs::hbar * c * c * c);
}

ModeDensity tabulated_mode_density(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw DomainError("mode density table needs at least two rows");
    }
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first == points[i - 1].first) {
            throw DomainError("mode density table has a repeated frequency");
        }
    }
    for (const auto& [w, g] : points) {
        if (!std::isfinite(w) || !std::isfinite(g) || g < 0.0) {
            throw DomainError("mode density table entries must be finite with weight >= 0");
        }
    }
    return [pts = std::move(points)](double w) {
        if (w < pts.front().first || w > pts.back().first) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "mode density table does not cover frequency " << w;
            throw SidebandOutOfBand(msg.str());
        }
        auto hi = std::lower_bound(pts.begin(), pts.end(), w,
                                   [](const auto& p, double x) { return p.first < x; });
        if (hi->first == w) {
            return hi->second;
        }
        auto lo = hi - 1;
        const double t = (w - lo->first) / (hi->first - lo->first);
        return lo->second + t * (hi->second - lo->second);
    };
}

std::vector<std::pair<double, double>> read_mode_density_table(std::istream& in) {
    std::vector<std::pair<double, double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        double w = 0.0;
        double g = 0.0;
        if (!(fields >> w)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            throw DomainError("mode density table line " + std::to_string(lineno) + ": bad frequency");
        }
        std::string rest;
        if (!(fields >> g) || (fields >> rest)) {
            throw DomainError("mode density table line " + std::to_string(lineno) +
                              ": expected two columns");
        }
        rows.emplace_back(w, g);
    }
    return rows;
}

ModeDensity lorentzian_mode_density(double center, double half_width, double peak,
                                    double background) {
    if (!(half_width > 0.0) || peak < 0.0 || background < 0.0) {
        throw DomainError("lorentzian_mode_density: need half_width > 0, peak >= 0, background >= 0");
    }
    return [=](double w) {
        const double x = w - center;
        return background + peak * half_width * half_width / (x * x + half_width * half_width);
    };
}

}  // namespace optforce
