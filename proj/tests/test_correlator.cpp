#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <udw/correlator.hpp>

using namespace udw;
using namespace udw::corr;
using udw::lorentz::FourVector;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("correlator") {

TEST_CASE("mode normalization and phase") {
    ModeLabel k;
    k.k = {0.3, -1.2, 0.4};
    const double kn = k.norm();
    FourVector x{{0.7, -0.1, 2.0, 0.5}};
    const complexd u = plane_wave_mode(k, x);
    CHECK(std::abs(u) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * std::pow(2.0 * kPi, 3) * kn))
              .epsilon(1e-14));
    const double phase =
        kn * x[0] - (k.k[0] * x[1] + k.k[1] * x[2] + k.k[2] * x[3]);
    CHECK(std::arg(u) == doctest::Approx(std::remainder(phase, 2.0 * kPi))
                             .epsilon(1e-12));
}

TEST_CASE("zero momentum is rejected") {
    ModeLabel k;
    CHECK_THROWS_AS(k.norm(), ZeroMomentum);
    FourVector x{};
    CHECK_THROWS_AS(plane_wave_mode(k, x), ZeroMomentum);
}

TEST_CASE("Wightman kernel is Hermitian under argument swap") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        ModeLabel k;
        k.k = {u(gen), u(gen), u(gen)};
        if (std::abs(k.k[0]) + std::abs(k.k[1]) + std::abs(k.k[2]) < 0.1)
            continue;
        FourVector x1{{u(gen), u(gen), u(gen), u(gen)}};
        FourVector x2{{u(gen), u(gen), u(gen), u(gen)}};
        const complexd a = free_wightman_k(k, x1, x2);
        const complexd b = free_wightman_k(k, x2, x1);
        CHECK(std::abs(a - std::conj(b)) < 1e-15);
    }
}

TEST_CASE("plate kernel structure") {
    ModeLabel k;
    k.k = {0.5, 0.0, 1.5};
    CHECK(plate_kernel(k, 2.0, 0.0).value == complexd(1.0, 0.0));

    ModeLabel kt;  // grazing mode, k_z = 0: perfect mirror kills it
    kt.k = {1.0, 0.3, 0.0};
    CHECK(std::abs(plate_kernel(kt, 2.0, 1.0).value) < 1e-15);

    CHECK(std::abs(plate_kernel(k, 1.0, complexd(0.0, 1.0)).value -
                   (1.0 - complexd(0.0, 1.0) *
                              std::exp(complexd(0.0, 2.0 * 1.5 * 1.0)))) <
          1e-15);
    CHECK_THROWS_AS(plate_kernel(k, 0.0, 1.0), Error);
}

TEST_CASE("T-matrix coefficient") {
    ModeLabel k, kp;
    k.k = {1.0, 0.0, 2.0};
    kp.k = {1.0, 0.0, 2.0};
    const complexd R(0.3, -0.4);
    auto t = tmatrix_plate(k, kp, R);
    CHECK(t.same_momentum);
    CHECK(std::abs(t.coefficient - (-std::pow(2.0 * kPi, 3) * R)) < 1e-12);
    kp.k[2] = 1.9;
    auto t2 = tmatrix_plate(k, kp, R);
    CHECK_FALSE(t2.same_momentum);
    CHECK(t2.coefficient == complexd(0.0, 0.0));
}

TEST_CASE("image correlator equals free kernel times the flipped plate factor") {
    std::mt19937 gen(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0), u01(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        ModeLabel k;
        do {
            k.k = {3.0 * u(gen), 3.0 * u(gen), 3.0 * u(gen)};
        } while (std::sqrt(k.k[0] * k.k[0] + k.k[1] * k.k[1] +
                           k.k[2] * k.k[2]) < 0.1);
        const double d = 0.5 + 2.5 * u01(gen);
        FourVector r0{{u(gen), u(gen), u(gen), d - 3.0 * u01(gen)}};
        FourVector r1{{u(gen), u(gen), u(gen), d - 3.0 * u01(gen)}};
        const complexd R = std::polar(u01(gen), 2.0 * kPi * u01(gen));

        const complexd image = image_wightman_k(k, r0, r1, d, R);
        ModeLabel kf = k;
        kf.k[2] = -kf.k[2];
        const complexd free = free_wightman_k(k, r0, r1);
        const complexd kernel = free * plate_kernel(kf, d - r1[3], R).value;
        worst = std::max(worst, std::abs(image - kernel) / std::abs(free));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("Dirichlet boundary condition holds exactly on the surface") {
    ModeLabel k;
    k.k = {0.7, -0.2, 1.1};
    const double d = 1.5;
    FourVector r0{{0.2, 0.1, -0.3, 0.4}};
    FourVector rs{{1.0, 0.5, 0.2, d}};  // on the plate
    CHECK(image_wightman_k(k, r0, rs, d, 1.0) == complexd(0.0, 0.0));
}

TEST_CASE("points behind the plate are rejected") {
    ModeLabel k;
    k.k = {0.0, 0.0, 1.0};
    FourVector ok{{0.0, 0.0, 0.0, 0.5}};
    FourVector behind{{0.0, 0.0, 0.0, 2.5}};
    CHECK_THROWS_AS(image_wightman_k(k, ok, behind, 2.0, 1.0),
                    PointBeyondPlate);
    CHECK_THROWS_AS(image_wightman_k(k, behind, ok, 2.0, 1.0),
                    PointBeyondPlate);
}

}  // TEST_SUITE
