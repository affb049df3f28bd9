#include "doctest.h"

#include "optforce/error.hpp"
#include "optforce/integrator.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <vector>

using namespace optforce;

TEST_CASE("adaptive integration of exponential decay hits sample times") {
    auto rhs = [](double, const std::array<double, 1>& y) { return std::array<double, 1>{-2.0 * y[0]}; };
    const std::vector<double> ts{0.0, 0.1, 0.5, 1.0, 3.0};
    ode::Options opt;
    opt.rtol = opt.atol = 1e-12;
    const auto ys = ode::integrate(rhs, std::array<double, 1>{1.0}, 0.0, ts, opt);
    REQUIRE(ys.size() == ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        CHECK(ys[i][0] == doctest::Approx(std::exp(-2.0 * ts[i])).epsilon(1e-10));
    }
}

TEST_CASE("complex rotation stays on the unit circle") {
    using C = std::complex<double>;
    auto rhs = [](double, const std::array<C, 1>& y) { return std::array<C, 1>{C(0.0, 3.0) * y[0]}; };
    const std::vector<double> ts{10.0};
    ode::Options opt;
    opt.rtol = opt.atol = 1e-12;
    const auto ys = ode::integrate(rhs, std::array<C, 1>{C(1.0, 0.0)}, 0.0, ts, opt);
    CHECK(std::abs(ys[0][0] - std::exp(C(0.0, 30.0))) < 1e-9);
}

TEST_CASE("error shrinks with tolerance") {
    auto rhs = [](double, const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], -y[0]};
    };
    const std::vector<double> ts{20.0};
    double previous = 1.0;
    for (double tol : {1e-6, 1e-8, 1e-10, 1e-12}) {
        ode::Options opt;
        opt.rtol = opt.atol = tol;
        const auto y = ode::integrate(rhs, std::array<double, 2>{1.0, 0.0}, 0.0, ts, opt)[0];
        const double err = std::abs(y[0] - std::cos(20.0));
        CHECK(err < previous);
        CHECK(err < 1e3 * tol);
        previous = err;
    }
}

TEST_CASE("fixed-step convergence order") {
    auto rhs = [](double t, const std::array<double, 1>& y) {
        return std::array<double, 1>{std::cos(t) * y[0]};
    };
    const double exact = std::exp(std::sin(2.0));
    const double e1 = std::abs(ode::integrate_fixed(rhs, std::array<double, 1>{1.0}, 0.0, 2.0, 20)[0] - exact);
    const double e2 = std::abs(ode::integrate_fixed(rhs, std::array<double, 1>{1.0}, 0.0, 2.0, 40)[0] - exact);
    const double order = std::log2(e1 / e2);
    MESSAGE("observed order " << order);
    CHECK(order > 4.5);
}

TEST_CASE("step floor raises StepFailure") {
    // blows up at t = 1
    auto rhs = [](double, const std::array<double, 1>& y) { return std::array<double, 1>{y[0] * y[0]}; };
    const std::vector<double> ts{2.0};
    CHECK_THROWS_AS(ode::integrate(rhs, std::array<double, 1>{1.0}, 0.0, ts), StepFailure);
}

TEST_CASE("sample times must be ordered") {
    auto rhs = [](double, const std::array<double, 1>& y) { return y; };
    const std::vector<double> ts{1.0, 0.5};
    CHECK_THROWS_AS(ode::integrate(rhs, std::array<double, 1>{1.0}, 0.0, ts), DomainError);
    const std::vector<double> early{-1.0};
    CHECK_THROWS_AS(ode::integrate(rhs, std::array<double, 1>{1.0}, 0.0, early), DomainError);
}
