#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>

#include <udw/asymptotics.hpp>
#include <udw/force.hpp>
#include <udw/quadrature.hpp>

using namespace udw;

namespace {

const DetectorParams kParams{};  // Omega = sigma = lambda = 1

void BM_force_free_ground(benchmark::State& state) {
    DetectorState ground;
    SwitchingWindow w{1.0};
    for (auto _ : state) {
        auto f = force::force_free(kParams, ground, 0.5, w);
        benchmark::DoNotOptimize(f.F[1]);
    }
}
BENCHMARK(BM_force_free_ground);

void BM_force_free_excited(benchmark::State& state) {
    DetectorState excited;
    excited.excited_pop = 1.0;
    SwitchingWindow w{10.0};
    for (auto _ : state) {
        auto f = force::force_free(kParams, excited, 0.9, w);
        benchmark::DoNotOptimize(f.F[1]);
    }
}
BENCHMARK(BM_force_free_excited);

void BM_force_plate_finite(benchmark::State& state) {
    DetectorState ground;
    SwitchingWindow w{2.0};
    Plate plate{(double)state.range(0), complexd(M_SQRT1_2, M_SQRT1_2)};
    for (auto _ : state) {
        auto f = force::force_plate(kParams, ground, 0.5, plate, w,
                                    force::Regime::finite_time);
        benchmark::DoNotOptimize(f.F[3]);
    }
}
BENCHMARK(BM_force_plate_finite)->Arg(1)->Arg(10);

void BM_force_plate_long_ground(benchmark::State& state) {
    DetectorState ground;
    Plate plate{2.0, 1.0};
    for (auto _ : state) {
        auto f = force::force_plate(kParams, ground, 0.5, plate,
                                    SwitchingWindow{}, force::Regime::long_time);
        benchmark::DoNotOptimize(f.F[3]);
    }
}
BENCHMARK(BM_force_plate_long_ground);

void BM_force_plate_split_excited(benchmark::State& state) {
    DetectorState excited;
    excited.excited_pop = 1.0;
    Plate plate{2.0, complexd(M_SQRT1_2, M_SQRT1_2)};
    for (auto _ : state) {
        auto s = force::force_plate_split(kParams, excited, 0.5, plate);
        benchmark::DoNotOptimize(s.total.F[1]);
    }
}
BENCHMARK(BM_force_plate_split_excited);

void BM_meijer_reduced(benchmark::State& state) {
    const auto kind = state.range(0) == 0 ? asym::MeijerKind::friction
                                          : asym::MeijerKind::casimir;
    for (auto _ : state) {
        double g = asym::meijer_reduced(kind, 0.7);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_meijer_reduced)->Arg(0)->Arg(1);

void BM_angular_integral(benchmark::State& state) {
    const double dt = (double)state.range(0);
    for (auto _ : state) {
        double v = asym::angular_integral(asym::AngularKind::I1, 0.9, dt);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_angular_integral)->Arg(2)->Arg(50);

void BM_integrate_pv(benchmark::State& state) {
    quad::ToleranceSpec tol;
    for (auto _ : state) {
        auto r = quad::integrate_pv(
            [](double s) { return s * s * std::exp(-0.5 * s * s); }, 1.0, 0.0,
            std::numeric_limits<double>::infinity(), tol);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_integrate_pv);

void BM_integrate_sphere(benchmark::State& state) {
    quad::ToleranceSpec tol;
    for (auto _ : state) {
        auto r = quad::integrate_sphere(
            [](double th, double ph) {
                return std::exp(
                    complexd(0.0, 3.0 * std::cos(th) + std::sin(ph)));
            },
            tol);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_integrate_sphere);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
