#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <udw/force.hpp>
#include <udw/lorentz.hpp>
#include <udw/upsilon.hpp>

using namespace udw;
using namespace udw::ups;
using udw::corr::ModeLabel;
using udw::lorentz::Inertial;
using udw::lorentz::TrajectorySpec;
using udw::lorentz::Vec3;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("upsilon") {

TEST_CASE("inertial kernel factorizes into smearing times switching factor") {
    DetectorParams p;
    p.gap_omega = 1.3;
    const double v = 0.6;
    ModeLabel k;
    k.k = {0.8, -0.5, 1.1};
    SwitchingWindow w{2.0};

    const complexd ups = upsilon_inertial(p, v, k, w);
    const auto kt = lorentz::tilde_momentum(k.k, v);
    const double W = force::gaussian_smearing_ft(kt, p.smearing_sigma);
    const complexd beta = force::beta_factor(p.gap_omega, kt[0], w.delta_tau);
    CHECK(std::abs(ups - W * beta) < 1e-15 * std::abs(ups));
}

TEST_CASE("inertial kernel is invariant under rotations about the motion axis") {
    DetectorParams p;
    p.gap_omega = 0.7;
    const double v = 0.85;
    SwitchingWindow w{3.5};
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5), ang(0.0, 2.0 * kPi);
    for (int i = 0; i < 40; ++i) {
        Vec3 k{u(gen), u(gen), u(gen)};
        if (std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) < 0.1) continue;
        const double a = ang(gen);
        Vec3 kr{k[0], std::cos(a) * k[1] - std::sin(a) * k[2],
                std::sin(a) * k[1] + std::cos(a) * k[2]};
        ModeLabel m0, m1;
        m0.k = k;
        m1.k = kr;
        const complexd u0 = upsilon_inertial(p, v, m0, w);
        const complexd u1 = upsilon_inertial(p, v, m1, w);
        CHECK(std::abs(u0 - u1) < 1e-12 * std::max(1.0, std::abs(u0)));
    }
}

TEST_CASE("general worldline integral reduces to the inertial closed form") {
    DetectorParams p;
    p.gap_omega = 1.1;
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> u(-1.2, 1.2), uv(-0.8, 0.8),
        ut(0.5, 3.0);
    quad::ToleranceSpec tol;
    tol.rel_tol = 1e-10;
    for (int i = 0; i < 25; ++i) {
        const double v = uv(gen);
        ModeLabel k;
        do {
            k.k = {u(gen), u(gen), u(gen)};
        } while (std::sqrt(k.k[0] * k.k[0] + k.k[1] * k.k[1] +
                           k.k[2] * k.k[2]) < 0.1);
        const double tau = ut(gen);
        const complexd closed = upsilon_inertial(p, v, k, SwitchingWindow{tau});
        const complexd general = upsilon_general(
            TrajectorySpec{Inertial{Vec3{v, 0.0, 0.0}}}, p, k, tau, 0.0, tol);
        CHECK(std::abs(general - closed) <
              1e-8 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("time ordering is enforced") {
    DetectorParams p;
    ModeLabel k;
    k.k = {1.0, 0.0, 0.0};
    CHECK_THROWS_AS(upsilon_general(TrajectorySpec{Inertial{Vec3{0.3, 0, 0}}},
                                    p, k, -1.0, 0.0),
                    Error);
}

TEST_CASE("zero window gives a vanishing kernel") {
    DetectorParams p;
    ModeLabel k;
    k.k = {0.4, 0.2, -0.9};
    CHECK(std::abs(upsilon_inertial(p, 0.5, k, SwitchingWindow{0.0})) <
          1e-15);
}

}  // TEST_SUITE
