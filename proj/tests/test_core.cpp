#include <doctest.h>

#include <udw/core.hpp>

using namespace udw;

TEST_SUITE("core") {

TEST_CASE("parameter validation rejects unphysical detectors") {
    DetectorParams p;
    CHECK_NOTHROW(p.validate());

    p = DetectorParams{};
    p.smearing_sigma = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidSmearing);

    p = DetectorParams{};
    p.gap_omega = -1.0;
    CHECK_THROWS_AS(p.validate(), Error);

    p = DetectorParams{};
    p.coupling_lambda = 0.0;
    CHECK_THROWS_AS(p.validate(), Error);

    p = DetectorParams{};
    p.regulator_gamma = -1e-3;
    CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("density-matrix validation") {
    DetectorState s;
    s.excited_pop = 0.3;
    s.coherence = complexd(0.2, 0.1);  // |b|^2 = 0.05 <= 0.21
    CHECK_NOTHROW(validate_state(s));

    s.excited_pop = -0.1;
    CHECK_THROWS_AS(validate_state(s), NotDensityMatrix);
    s.excited_pop = 1.1;
    CHECK_THROWS_AS(validate_state(s), NotDensityMatrix);

    s.excited_pop = 0.3;
    s.coherence = complexd(0.5, 0.0);  // 0.25 > 0.21
    CHECK_THROWS_AS(validate_state(s), NotDensityMatrix);

    // boundary case: pure state |b|^2 = a(1-a)
    s.excited_pop = 0.5;
    s.coherence = complexd(0.5, 0.0);
    CHECK_NOTHROW(validate_state(s));
}

TEST_CASE("lorentz_gamma") {
    CHECK(lorentz_gamma(0.0) == 1.0);
    CHECK(lorentz_gamma(0.6) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(lorentz_gamma(-0.6) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK_THROWS_AS(lorentz_gamma(1.0), FasterThanLight);
    CHECK_THROWS_AS(lorentz_gamma(-1.5), FasterThanLight);
}

TEST_CASE("dimensionless groups") {
    DetectorParams p;
    p.gap_omega = 2.0;
    p.smearing_sigma = 1.0;
    SwitchingWindow w{5.0};

    auto g = to_dimensionless(p, Plate{3.0, 1.0}, 0.6, w);
    CHECK(g.y == doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(g.x_gap == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g.t_gap == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(g.d_ratio == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(g.beta_v == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(g.gamma_lorentz == doctest::Approx(1.25).epsilon(1e-14));

    auto gf = to_dimensionless(p, Free{}, 0.0, w);
    CHECK(gf.d_ratio == 0.0);
    CHECK(gf.gamma_lorentz == 1.0);
}

}  // TEST_SUITE
