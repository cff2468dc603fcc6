#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include <udw/asymptotics.hpp>

using namespace udw;
using namespace udw::asym;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("asymptotics") {

TEST_CASE("special functions against frozen references") {
    struct Ref {
        Fn fn;
        double x, value;
    };
    const Ref refs[] = {
        {Fn::dawson, 0.7, 0.51050405755923178325},
        {Fn::dawson, 5.5, 0.092493232310754759967},
        {Fn::expint_Ei, 1.0, 1.8951178163559367555},
        {Fn::expint_Ei, 2.5, 7.0737658945786007119},
        {Fn::expint_Ei, -3.0, -0.013048381094197037413},
        {Fn::erfi, 1.3, 2.9560865768516222163},
        {Fn::Si, 3.2, 1.8514008970184402793},
        {Fn::Ci, 3.2, 0.055257411719942491719},
        {Fn::Si, 40.0, 1.5869851193547845068},
        {Fn::Ci, 40.0, 0.019020007896208766962},
        {Fn::bessel_J0, 2.7, -0.14244937004601182182},
        {Fn::bessel_J1, 2.7, 0.44160137911825310642},
        {Fn::bessel_J2, 2.7, 0.46956150272619930806},
        {Fn::erf, 0.9, 0.79690821242283212852},
    };
    for (const auto& r : refs) {
        CAPTURE((int)r.fn);
        CAPTURE(r.x);
        CHECK(special_eval(r.fn, r.x) ==
              doctest::Approx(r.value).epsilon(1e-12));
    }
}

TEST_CASE("special function domain errors") {
    CHECK_THROWS_AS(special_eval(Fn::expint_Ei, 0.0), DomainError);
    CHECK_THROWS_AS(special_eval(Fn::Ci, 0.0), DomainError);
    CHECK_THROWS_AS(special_eval(Fn::Ci, -1.0), DomainError);
}

TEST_CASE("Meijer-G reductions against frozen references") {
    CHECK(meijer_reduced(MeijerKind::friction, 1.0) ==
          doctest::Approx(-0.026712053078700899).epsilon(1e-9));
    CHECK(meijer_reduced(MeijerKind::casimir, 1.0) ==
          doctest::Approx(-0.16775944896563997).epsilon(1e-9));
    CHECK_THROWS_AS(meijer_reduced(MeijerKind::friction, 0.0), DomainError);
}

TEST_CASE("Meijer-G reductions approach their quoted limits") {
    // y = sigma Omega / sqrt(2)
    {
        const double y = 1e-3, so = std::sqrt(2.0) * y;
        CHECK(meijer_reduced(MeijerKind::friction, y) ==
              doctest::Approx(-1.0 / (kPi * so * so)).epsilon(5e-3));
        CHECK(meijer_reduced(MeijerKind::casimir, y) ==
              doctest::Approx(-1.0 / (std::sqrt(2.0 * kPi) * so * so * so))
                  .epsilon(5e-3));
    }
    {
        // large argument: the approach is slow (relative error ~ 1.6/(sigma
        // Omega)), so first-order Richardson in 1/(sigma Omega) is used
        auto rich = [](MeijerKind kind, auto limit) {
            const double so1 = 30.0, so2 = 60.0;
            const double r1 =
                meijer_reduced(kind, so1 / std::sqrt(2.0)) / limit(so1);
            const double r2 =
                meijer_reduced(kind, so2 / std::sqrt(2.0)) / limit(so2);
            return 2.0 * r2 - r1;
        };
        const double rf = rich(MeijerKind::friction, [](double so) {
            return 1.0 / (std::sqrt(2.0 * kPi) * so * so * so);
        });
        const double rc = rich(MeijerKind::casimir, [](double so) {
            return 2.0 / (kPi * so * so * so * so);
        });
        CHECK(rf == doctest::Approx(1.0).epsilon(1e-2));
        CHECK(rc == doctest::Approx(1.0).epsilon(1e-2));
    }
}

TEST_CASE("Meijer-G reductions rise monotonically through the small-y regime") {
    // both kinds are negative and increasing below y ~ 1 (they oscillate at
    // larger argument, so no global monotonicity is claimed)
    for (MeijerKind kind : {MeijerKind::friction, MeijerKind::casimir}) {
        double prev = -std::numeric_limits<double>::infinity();
        for (double y = 1e-3; y <= 1.0; y *= 1.6) {
            const double g = meijer_reduced(kind, y);
            CHECK(g < 0.0);
            CHECK(g > prev);
            prev = g;
        }
    }
}

TEST_CASE("plate angular integrals against frozen references") {
    CHECK(angular_integral(AngularKind::I0, 0.5, 2.0) ==
          doctest::Approx(-0.33635666458130145).epsilon(1e-9));
    CHECK(angular_integral(AngularKind::I1, 0.5, 2.0) ==
          doctest::Approx(0.35752838581644641).epsilon(1e-9));
    CHECK_THROWS_AS(angular_integral(AngularKind::I0, 0.5, 0.0), DomainError);
}

TEST_CASE("angular integrals versus their large-distance forms") {
    const double v = 0.999, dt = 50.0;
    const double i0 = angular_integral(AngularKind::I0, v, dt);
    CHECK(i0 == doctest::Approx(angular_limit_C(AngularLimit::C0, v, dt))
                    .epsilon(1e-3));
    // I1 carries a residual tangent correction that the plain C1 form drops
    const double i1 = angular_integral(AngularKind::I1, v, dt);
    const double c1 = angular_limit_C(AngularLimit::C1, v, dt);
    const double expected = 1.0 - std::tan(2.0 * dt) / (2.0 * dt);
    CHECK(i1 / c1 == doctest::Approx(expected).epsilon(1e-2));
}

TEST_CASE("closed-form limit values") {
    DetectorParams p;  // Omega = sigma = lambda = 1
    SwitchingWindow w{0.0};

    // ground long-time large-d Casimir: -R_R lambda^2 / (16 pi^2 Omega d^3)
    RegimeKey key{State::ground, Component::casimir_z, Time::long_t,
                  Distance::large_d, Velocity::high_v, Contribution::total};
    const double d = 3.0;
    CHECK(asymptote(key, p, 0.9, d, 1.0, w) ==
          doctest::Approx(-1.0 / (16.0 * kPi * kPi * d * d * d))
              .epsilon(1e-14));

    // the small-v normalization differs by exactly a factor of two
    key.velocity = Velocity::small_v;
    CHECK(asymptote(key, p, 0.01, d, 1.0, w) ==
          doctest::Approx(-1.0 / (8.0 * kPi * kPi * d * d * d))
              .epsilon(1e-14));

    // excited long-time small-d delta friction: -gv Omega^2 lambda^2 R_R W/2pi
    RegimeKey fr{State::excited, Component::friction_x, Time::long_t,
                 Distance::small_d, Velocity::any, Contribution::delta};
    const double v = 0.6, gv = 1.25 * 0.6, W = std::exp(-0.5);
    CHECK(asymptote(fr, p, v, 0.01, 1.0, w) ==
          doctest::Approx(-gv * W / (2.0 * kPi)).epsilon(1e-13));
}

TEST_CASE("pointlike bracket limits") {
    DetectorParams p;
    SwitchingWindow w{0.0};
    RegimeKey key{State::ground, Component::casimir_z, Time::long_t,
                  Distance::pointlike, Velocity::small_v, Contribution::total};
    // small x = 2 d Omega: bracket -> pi, force -> -R lambda^2/(16 pi d^2)
    const double ds = 1e-4;
    CHECK(asymptote(key, p, 0.0, ds, 1.0, w) /
              (-1.0 / (16.0 * kPi * ds * ds)) ==
          doctest::Approx(1.0).epsilon(2e-3));
    // large x: bracket -> 4/x, force -> -R lambda^2/(8 pi^2 Omega d^3)
    const double dl = 50.0;
    CHECK(asymptote(key, p, 0.0, dl, 1.0, w) /
              (-1.0 / (8.0 * kPi * kPi * dl * dl * dl)) ==
          doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("uncatalogued regime keys are rejected") {
    DetectorParams p;
    SwitchingWindow w{1.0};
    RegimeKey bad{State::ground, Component::casimir_z, Time::short_t,
                  Distance::free_space, Velocity::any, Contribution::total};
    CHECK_THROWS_AS(asymptote(bad, p, 0.5, 1.0, 1.0, w), UnknownRegime);
}

}  // TEST_SUITE
