#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>

#include <udw/force.hpp>
#include <udw/quadrature.hpp>

using namespace udw;
using namespace udw::force;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("force") {

TEST_CASE("smearing weight is the Gaussian of the boosted spatial momentum") {
    lorentz::FourVector kt{{-2.0, 0.5, -1.0, 1.2}};
    const double q2 = 0.25 + 1.0 + 1.44;
    CHECK(gaussian_smearing_ft(kt, 1.0) ==
          doctest::Approx(std::exp(-0.5 * q2)).epsilon(1e-14));
    CHECK(gaussian_smearing_ft(kt, 2.0) ==
          doctest::Approx(std::exp(-2.0 * q2)).epsilon(1e-14));
    CHECK_THROWS_AS(gaussian_smearing_ft(kt, 0.0), InvalidSmearing);
}

TEST_CASE("switching factor is continuous through resonance") {
    // omega_eff = c k0_tilde: beta -> delta_tau
    const double dt = 1.5;
    const complexd at_res = beta_factor(complexd(2.0, 0.0), 2.0, dt);
    CHECK(std::abs(at_res - complexd(dt, 0.0)) < 1e-12);
    const complexd near = beta_factor(complexd(2.0 + 1e-9, 0.0), 2.0, dt);
    CHECK(std::abs(near - at_res) < 1e-8);

    // generic value: i/C (-1 + e^{-i dt C}) with C = omega_eff - ck0
    const double C = 0.8;
    const complexd expect =
        complexd(0.0, 1.0) / C * (-1.0 + std::exp(complexd(0.0, -dt * C)));
    CHECK(std::abs(beta_factor(complexd(3.0, 0.0), 3.0 - C, dt) - expect) <
          1e-14);
}

TEST_CASE("alpha split: Lorentzian pair for finite regulator") {
    const double omega = -2.0, ck0 = -3.0, gam = 0.1;  // C = 1
    auto a = alpha_split(omega, ck0, gam);
    CHECK_FALSE(a.distributional);
    CHECK(a.alpha_r == doctest::Approx(1.0 / (0.01 + 1.0)).epsilon(1e-14));
    CHECK(a.alpha_i == doctest::Approx(-0.1 / (0.01 + 1.0)).epsilon(1e-14));

    auto pv = alpha_split(omega, ck0, 0.0);
    CHECK(pv.distributional);
    CHECK(pv.alpha_i == 0.0);
    CHECK(pv.shell == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("Lorentzian regulator converges to the on-shell delta") {
    // (1/pi) int ds g(s) Gamma/(Gamma^2 + (s - s*)^2) -> g(s*)
    quad::ToleranceSpec tol;
    const double omega = -2.0;  // shell at s* = 2
    auto g = [](double s) { return std::exp(-0.5 * s * s); };
    auto smeared = [&](double gam) {
        auto r = quad::integrate_1d(
            [&](double s) {
                return -g(s) * alpha_split(omega, -s, gam).alpha_i / kPi;
            },
            0.0, 40.0, tol, {2.0});
        return r.value;
    };
    const double exact = g(2.0);
    const double e1 = std::abs(smeared(0.1) - exact);
    const double e2 = std::abs(smeared(0.01) - exact);
    const double e3 = std::abs(smeared(0.001) - exact);
    CHECK(e2 < e1);
    CHECK(e3 < e2);
    CHECK(e3 / exact < 2e-3);
}

TEST_CASE("free-space force against the frozen reference point") {
    DetectorParams p;  // sigma = Omega = lambda = 1
    DetectorState ground;
    SwitchingWindow w{1.0};  // Omega dtau = 1
    auto F = force_free(p, ground, 0.5, w);
    CHECK(F.converged);
    CHECK(F.F[1] ==
          doctest::Approx(-0.00833219907948297376).epsilon(1e-9));
    CHECK(std::abs(F.F[2]) < 1e-14);

    const double J = force_free_reduced_ground(p, 0.5, w) /
                     (-lorentz_gamma(0.5) * 0.5 / (2.0 * kPi * kPi));
    CHECK(J == doctest::Approx(0.2848721585288057086).epsilon(1e-7));
}

TEST_CASE("full 3-D free force matches the reduced radial form off-reference") {
    DetectorParams p;
    p.gap_omega = 0.5;
    DetectorState ground;
    SwitchingWindow w{4.0};
    for (double v : {0.1, 0.9}) {
        auto F = force_free(p, ground, v, w);
        const double red = force_free_reduced_ground(p, v, w);
        CHECK(F.F[1] == doctest::Approx(red).epsilon(1e-7));
    }
}

TEST_CASE("free force symmetries in the velocity") {
    DetectorParams p;
    DetectorState ground;
    SwitchingWindow w{2.0};
    auto Fp = force_free(p, ground, 0.4, w);
    auto Fm = force_free(p, ground, -0.4, w);
    CHECK(Fp.F[1] == doctest::Approx(-Fm.F[1]).epsilon(1e-10));  // odd
    CHECK(Fp.F[0] == doctest::Approx(Fm.F[0]).epsilon(1e-10));   // even
    auto F0 = force_free(p, ground, 0.0, w);
    CHECK(std::abs(F0.F[1]) < 1e-14);
}

TEST_CASE("free force is independent of the coherence") {
    DetectorParams p;
    SwitchingWindow w{1.5};
    DetectorState plain;
    plain.excited_pop = 0.3;
    DetectorState coh = plain;
    coh.coherence = complexd(0.25, -0.3);
    auto a = force_free(p, plain, 0.6, w);
    auto b = force_free(p, coh, 0.6, w);
    CHECK(std::memcmp(a.F.data(), b.F.data(), sizeof(a.F)) == 0);
}

TEST_CASE("plate correction vanishes for a transparent plate") {
    DetectorParams p;
    DetectorState ground;
    SwitchingWindow w{2.0};
    Plate plate{1.5, 0.0};
    auto F = force_plate(p, ground, 0.5, plate, w, Regime::finite_time);
    for (int mu = 0; mu < 4; ++mu) CHECK(F.F[mu] == 0.0);
    auto L = force_plate(p, ground, 0.5, plate, w, Regime::long_time);
    for (int mu = 0; mu < 4; ++mu) CHECK(L.F[mu] == 0.0);
}

TEST_CASE("no lateral force develops out of the plane of motion") {
    DetectorParams p;
    DetectorState st;
    st.excited_pop = 0.4;
    SwitchingWindow w{3.0};
    Plate plate{2.0, complexd(0.6, 0.5)};
    auto F = force_plate(p, st, 0.7, plate, w, Regime::finite_time);
    const double scale =
        std::max({std::abs(F.F[0]), std::abs(F.F[1]), std::abs(F.F[3])});
    CHECK(std::abs(F.F[2]) <= 1e-10 * scale);
}

TEST_CASE("ground long-time Casimir force is velocity independent") {
    DetectorParams p;
    DetectorState ground;
    Plate plate{2.0, 1.0};
    SwitchingWindow w{};
    auto F0 = force_plate(p, ground, 0.0, plate, w, Regime::long_time);
    auto F9 = force_plate(p, ground, 0.9, plate, w, Regime::long_time);
    CHECK(F9.F[3] == doctest::Approx(F0.F[3]).epsilon(1e-6));
}

TEST_CASE("long-time split recombines to the total") {
    DetectorParams p;
    DetectorState excited;
    excited.excited_pop = 1.0;
    Plate plate{1.0, complexd(0.5, 0.5)};
    auto split = force_plate_split(p, excited, 0.6, plate);
    for (int mu = 0; mu < 4; ++mu)
        CHECK(split.total.F[mu] ==
              doctest::Approx(split.pv.F[mu] + split.delta.F[mu])
                  .epsilon(1e-12));
    auto direct = force_plate(p, excited, 0.6, plate, SwitchingWindow{},
                              Regime::long_time);
    for (int mu = 0; mu < 4; ++mu)
        CHECK(direct.F[mu] == doctest::Approx(split.total.F[mu])
                                  .epsilon(1e-10));
}

TEST_CASE("state mixing is affine in the excited population") {
    ForceComponents g, e;
    g.F = {1.0, -2.0, 0.0, 4.0};
    e.F = {3.0, 6.0, 0.0, -8.0};
    g.err = {0.3, 0.0, 0.0, 0.4};
    e.err = {0.4, 0.0, 0.0, 0.3};
    auto m = mix_force(0.25, g, e);
    CHECK(m.F[0] == doctest::Approx(0.75 * 1.0 + 0.25 * 3.0).epsilon(1e-15));
    CHECK(m.F[3] == doctest::Approx(0.75 * 4.0 + 0.25 * (-8.0)).epsilon(1e-15));
    CHECK(m.err[0] == doctest::Approx(std::hypot(0.75 * 0.3, 0.25 * 0.4))
                          .epsilon(1e-12));
    CHECK_THROWS_AS(mix_force(1.5, g, e), NotDensityMatrix);

    ForceComponents other = e;
    other.normalization = Normalization::friction_units;
    CHECK_THROWS_AS(mix_force(0.5, g, other), NormalizationMismatch);
}

TEST_CASE("normalization divisors") {
    DetectorParams p;
    p.gap_omega = 3.0;
    p.coupling_lambda = 2.0;
    const double v = 0.6, g = 1.25, d = 2.0;
    CHECK(normalization_divisor(Normalization::raw_natural, p, v, d) == 1.0);
    CHECK(normalization_divisor(Normalization::friction_units, p, v, d) ==
          doctest::Approx(4.0 * 9.0 * g * v / (2.0 * kPi * kPi))
              .epsilon(1e-14));
    CHECK(normalization_divisor(Normalization::casimir_units, p, v, d) ==
          doctest::Approx(4.0 / (8.0 * kPi * kPi * 3.0 * 8.0)).epsilon(1e-14));
    CHECK_THROWS_AS(normalization_divisor(Normalization::friction_units, p,
                                          0.0, d),
                    Error);
}

TEST_CASE("invalid plate and state inputs are rejected") {
    DetectorParams p;
    DetectorState ground;
    SwitchingWindow w{1.0};
    CHECK_THROWS_AS(force_plate(p, ground, 0.5, Plate{-1.0, 1.0}, w,
                                Regime::finite_time),
                    Error);
    CHECK_THROWS_AS(force_plate(p, ground, 0.5, Plate{1.0, complexd(1.2, 0.0)},
                                w, Regime::finite_time),
                    Error);
    CHECK_THROWS_AS(force_free(p, ground, 1.0, w), FasterThanLight);
}

TEST_CASE("forces are bitwise deterministic across repeated calls") {
    DetectorParams p;
    DetectorState st;
    st.excited_pop = 0.5;
    SwitchingWindow w{2.0};
    Plate plate{1.0, complexd(0.7, 0.3)};
    auto a = force_plate(p, st, 0.6, plate, w, Regime::finite_time);
    auto b = force_plate(p, st, 0.6, plate, w, Regime::finite_time);
    CHECK(std::memcmp(a.F.data(), b.F.data(), sizeof(a.F)) == 0);
}

}  // TEST_SUITE
