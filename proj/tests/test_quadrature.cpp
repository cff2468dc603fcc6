#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>

#include <udw/quadrature.hpp>

using namespace udw;
using namespace udw::quad;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("finite-interval polynomials and oscillatory integrands") {
    ToleranceSpec tol;
    auto r = integrate_1d([](double x) { return x * x; }, 0.0, 1.0, tol);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    auto osc = integrate_1d([](double x) { return std::sin(41.0 * x); }, 0.0,
                            kPi, tol);
    CHECK(osc.converged);
    CHECK(osc.value == doctest::Approx(2.0 / 41.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite Gaussian moments") {
    ToleranceSpec tol;
    auto g = integrate_1d([](double s) { return std::exp(-0.5 * s * s); }, 0.0,
                          kInf, tol);
    CHECK(g.converged);
    CHECK(g.value == doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-12));

    // frozen reference: int_0^inf s^2 e^{-s^2/2} / (s + 1) ds
    auto f = integrate_1d(
        [](double s) { return s * s * std::exp(-0.5 * s * s) / (s + 1.0); },
        0.0, kInf, tol);
    CHECK(f.converged);
    CHECK(f.value == doctest::Approx(0.5173118025041761533).epsilon(1e-11));
}

TEST_CASE("complex-valued integration") {
    ToleranceSpec tol;
    auto r = integrate_1d_c(
        [](double t) { return std::exp(complexd(0.0, t)); }, 0.0, kPi, tol);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.value.imag() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("identically zero integrands converge immediately") {
    ToleranceSpec tol;  // abs_tol = 0 on purpose
    auto r = integrate_1d([](double) { return 0.0; }, 0.0, 1.0, tol);
    CHECK(r.converged);
    CHECK(r.value == 0.0);
}

TEST_CASE("principal value against a frozen reference") {
    ToleranceSpec tol;
    auto r = integrate_pv([](double s) { return std::exp(-0.5 * s * s); }, 1.0,
                          0.0, 60.0, tol);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(-1.046124238370946667).epsilon(1e-11));
}

TEST_CASE("principal value of an even-around-the-pole numerator vanishes") {
    ToleranceSpec tol;
    const double p = 2.5;
    auto r = integrate_pv(
        [p](double s) { return std::exp(-(s - p) * (s - p)); }, p, p - 1.0,
        p + 1.0, tol);
    CHECK(std::abs(r.value) < 1e-10);
}

TEST_CASE("principal value matches symmetric epsilon excision") {
    ToleranceSpec tol;
    tol.rel_tol = 1e-10;
    auto f = [](double s) { return std::exp(-0.5 * s * s) * (1.0 + 0.5 * s); };
    const double pole = 1.3, a = 0.0, b = 20.0;
    auto pv = integrate_pv(f, pole, a, b, tol);

    const double eps = 1e-6;
    auto left = integrate_1d([&](double s) { return f(s) / (s - pole); }, a,
                             pole - eps, tol);
    auto right = integrate_1d([&](double s) { return f(s) / (s - pole); },
                              pole + eps, b, tol);
    // excision error is O(eps f'(pole))
    CHECK(pv.value ==
          doctest::Approx(left.value + right.value).epsilon(1e-5));
}

TEST_CASE("PV pole must be interior") {
    ToleranceSpec tol;
    CHECK_THROWS_AS(
        integrate_pv([](double) { return 1.0; }, -1.0, 0.0, 1.0, tol),
        PoleOutsideDomain);
}

TEST_CASE("sphere rule reproduces exact moments") {
    ToleranceSpec tol;
    auto one = integrate_sphere(
        [](double, double) { return complexd(1.0, 0.0); }, tol);
    CHECK(one.converged);
    CHECK(one.value.real() == doctest::Approx(4.0 * kPi).epsilon(1e-12));

    auto cos2 = integrate_sphere(
        [](double th, double) {
            const double c = std::cos(th);
            return complexd(c * c, 0.0);
        },
        tol);
    CHECK(cos2.value.real() == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-12));

    // a pure e^{i phi} harmonic integrates to zero exactly on the trapezoid
    ToleranceSpec tol0;
    tol0.abs_tol = 1e-14;
    auto harm = integrate_sphere(
        [](double th, double ph) {
            return std::sin(th) * std::exp(complexd(0.0, ph));
        },
        tol0);
    CHECK(std::abs(harm.value) < 1e-13);
}

TEST_CASE("on-shell surface integral of unity") {
    // int dOmega s*^2 / (gamma (1 - v u))^3 = 4 pi gamma s*^2
    ToleranceSpec tol;
    const double v = 0.5, s_star = 2.0;
    const double gamma = 1.0 / std::sqrt(1.0 - v * v);
    auto r = onshell_surface_integral(
        [](double, double) { return complexd(1.0, 0.0); }, s_star, v, tol);
    CHECK(r.converged);
    CHECK(r.value.real() ==
          doctest::Approx(4.0 * kPi * gamma * s_star * s_star).epsilon(1e-10));
    CHECK(std::abs(r.value.imag()) < 1e-12);
}

TEST_CASE("on-shell integral rejects unreachable resonances") {
    ToleranceSpec tol;
    CHECK_THROWS_AS(onshell_surface_integral(
                        [](double, double) { return complexd(1.0, 0.0); },
                        0.0, 0.5, tol),
                    NonPositiveShell);
    CHECK_THROWS_AS(onshell_surface_integral(
                        [](double, double) { return complexd(1.0, 0.0); },
                        -1.0, 0.5, tol),
                    NonPositiveShell);
}

TEST_CASE("non-finite integrand values are reported, not propagated") {
    ToleranceSpec tol;
    CHECK_THROWS_AS(integrate_1d([](double x) { return 1.0 / x; }, -1.0, 1.0,
                                 tol),
                    NonFiniteIntegrand);
}

TEST_CASE("results are bitwise deterministic across repeated calls") {
    ToleranceSpec tol;
    auto f = [](double s) {
        return std::exp(-0.3 * s * s) * std::sin(7.0 * s + 0.2);
    };
    auto a = integrate_1d(f, 0.0, kInf, tol);
    auto b = integrate_1d(f, 0.0, kInf, tol);
    CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
    CHECK(a.evaluations == b.evaluations);

    auto g = [](double th, double ph) {
        return std::exp(complexd(0.0, std::cos(th) + 0.5 * std::sin(ph)));
    };
    auto sa = integrate_sphere(g, tol);
    auto sb = integrate_sphere(g, tol);
    CHECK(std::memcmp(&sa.value, &sb.value, sizeof(complexd)) == 0);
}

TEST_CASE("breakpoints are honored for piecewise-structured integrands") {
    ToleranceSpec tol;
    auto f = [](double x) { return std::abs(x - 0.3); };
    auto r = integrate_1d(f, 0.0, 1.0, tol, {0.3});
    CHECK(r.converged);
    // int_0^1 |x - 0.3| dx = 0.3^2/2 + 0.7^2/2
    CHECK(r.value == doctest::Approx(0.045 + 0.245).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre nodes and weights") {
    const auto& [x, w] = gauss_legendre(16);
    REQUIRE(x.size() == 16);
    double wsum = 0.0;
    for (double wi : w) wsum += wi;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (size_t i = 0; i < 8; ++i) {
        CHECK(x[i] == doctest::Approx(-x[15 - i]).epsilon(1e-14));
        CHECK(w[i] == doctest::Approx(w[15 - i]).epsilon(1e-14));
    }
    // degree-31 exactness spot check: int_{-1}^{1} x^10 dx = 2/11
    double m10 = 0.0;
    for (size_t i = 0; i < 16; ++i) m10 += w[i] * std::pow(x[i], 10);
    CHECK(m10 == doctest::Approx(2.0 / 11.0).epsilon(1e-13));
}

TEST_CASE("unconverged results are flagged, best value still returned") {
    ToleranceSpec tol;
    tol.rel_tol = 1e-14;
    tol.max_evals = 60;  // far too few for this integrand
    auto r = integrate_1d([](double x) { return std::sin(50.0 * x * x); }, 0.0,
                          3.0, tol);
    CHECK_FALSE(r.converged);
    CHECK(std::isfinite(r.value));
}

}  // TEST_SUITE
