#include "udw/asymptotics.hpp"

#include <cmath>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_dawson.h>
#include <gsl/gsl_sf_expint.h>

#include <limits>
#include <numbers>
#include <vector>

namespace udw::asym {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

double special_eval(Fn fn, double x) {
    switch (fn) {
        case Fn::dawson:
            return gsl_sf_dawson(x);
        case Fn::expint_Ei:
            if (x == 0.0) throw DomainError("Ei undefined at x = 0");
            return gsl_sf_expint_Ei(x);
        case Fn::erfi:
            // erfi(x) = 2 e^{x^2} D(x) / sqrt(pi)
            return 2.0 * std::exp(x * x) * gsl_sf_dawson(x) / kSqrtPi;
        case Fn::Si:
            return gsl_sf_Si(x);
        case Fn::Ci:
            if (x <= 0.0) throw DomainError("Ci requires x > 0");
            return gsl_sf_Ci(x);
        case Fn::bessel_J0:
            return gsl_sf_bessel_J0(x);
        case Fn::bessel_J1:
            return gsl_sf_bessel_J1(x);
        case Fn::bessel_J2:
            return gsl_sf_bessel_Jn(2, x);
        case Fn::erf:
            return std::erf(x);
    }
    throw DomainError("unknown function id");
}

double meijer_reduced(MeijerKind kind, double y) {
    if (!(y > 0.0)) throw DomainError("meijer_reduced requires y > 0");
    const double omega = std::sqrt(2.0) * y;  // sigma = 1 internally
    const int p = (kind == MeijerKind::friction) ? 2 : 3;
    quad::ToleranceSpec tol;
    tol.rel_tol = 1e-10;
    auto f = [&](double s) { return std::pow(s, p) * std::exp(-0.5 * s * s); };
    auto r = quad::integrate_pv(f, omega, 0.0,
                                std::numeric_limits<double>::infinity(), tol);
    return -r.value / (kPi * std::pow(omega, p));
}

double angular_integral(AngularKind kind, double v, double dt,
                        const quad::ToleranceSpec& tol) {
    if (!(dt > 0.0)) throw DomainError("angular_integral requires dt > 0");
    const double gamma = lorentz_gamma(v);
    auto integrand = [&](double theta) {
        const double u = std::cos(theta);
        const double st = std::sin(theta);
        const double den = 1.0 - v * u;
        const double arg = 2.0 * dt * st / (gamma * den);
        const double den3 = den * den * den;
        if (kind == AngularKind::I0)
            return st * u / den3 * gsl_sf_bessel_J0(arg);
        return st * st / den3 * gsl_sf_bessel_J1(arg);
    };
    // the Bessel argument peaks at exactly 2 dt; resolve its oscillations
    const long n = std::min<long>(16000, std::max<long>(16, (long)(16.0 * dt / kPi)));
    std::vector<double> bp;
    bp.reserve(n);
    for (long i = 1; i < n; ++i) bp.push_back(kPi * i / n);
    auto r = quad::adaptive_gk<double>(integrand, 0.0, kPi, tol, bp);
    return r.value;
}

double angular_limit_C(AngularLimit kind, double v, double dt) {
    const double gamma = lorentz_gamma(v);
    if (kind == AngularLimit::C0)
        return std::pow(gamma, 4) * v * std::sin(2.0 * dt) / dt;
    return -std::pow(gamma, 3) * std::cos(2.0 * dt) / dt;
}

double asymptote(const RegimeKey& key, const DetectorParams& params, double v,
                 double d, complexd R, const SwitchingWindow& window) {
    params.validate();
    const double gamma = lorentz_gamma(v);
    const double gv = gamma * v;
    const double lam2 = params.coupling_lambda * params.coupling_lambda;
    const double O = params.gap_omega;
    const double sig = params.smearing_sigma;
    const double dt = window.delta_tau;
    const double RR = R.real(), RI = R.imag();
    const double y = sig * O / std::sqrt(2.0);
    const double W = std::exp(-0.5 * sig * sig * O * O);
    const double x = 2.0 * d * O;

    using S = State;
    using C = Component;
    using T = Time;
    using D = Distance;
    using V = Velocity;
    using K = Contribution;
    auto is = [&](S s, C c, T t, D dd, V vv, K k) {
        return key == RegimeKey{s, c, t, dd, vv, k};
    };

    // ---- free space --------------------------------------------------------
    const double free_short =
        -gv * lam2 * dt * std::exp(-0.5 * dt * dt / (sig * sig)) /
        (2.0 * std::sqrt(2.0) * kPi * kSqrtPi * sig * sig * sig);
    if (is(S::ground, C::friction_x, T::short_t, D::free_space, V::any, K::total) ||
        is(S::excited, C::friction_x, T::short_t, D::free_space, V::any, K::total))
        return free_short;
    if (is(S::ground, C::friction_x, T::long_t, D::free_space, V::any, K::total))
        return gv * lam2 * std::cos(dt * O) / (kPi * kPi * O * dt * dt * dt);
    if (is(S::excited, C::friction_x, T::long_t, D::free_space, V::any, K::total))
        return -gv * lam2 / (2.0 * kPi) *
               (O * O * W + (2.0 / kPi) * std::cos(dt * O) / (O * dt * dt * dt));

    // ---- plate, ground state, friction -------------------------------------
    if (is(S::ground, C::friction_x, T::short_t, D::small_d, V::any, K::total))
        return -gv * dt * dt / std::pow(sig, 4) * lam2 / (8.0 * kPi * kPi) * RI *
                   (4.0 + std::sqrt(2.0 * kPi) * sig * O) -
               gv * dt / std::pow(sig, 3) * lam2 / std::pow(2.0 * kPi, 1.5) * RR;
    if (is(S::ground, C::friction_x, T::short_t, D::large_d, V::any, K::total))
        return gv * dt * dt / std::pow(d, 4) * lam2 / (32.0 * kPi * kPi) * RI -
               gv * dt / std::pow(sig, 3) * lam2 / std::pow(2.0 * kPi, 1.5) * RR *
                   std::exp(-2.0 * d * d / (sig * sig));
    if (is(S::ground, C::friction_x, T::long_t, D::small_d, V::any, K::total)) {
        const double bracket =
            1.0 - kSqrtPi * y +
            y * y * (2.0 * kSqrtPi * special_eval(Fn::dawson, y) -
                     std::exp(-y * y) * special_eval(Fn::expint_Ei, y * y));
        return -RI * lam2 / (2.0 * kPi * kPi * sig * sig) * gv * bracket;
    }
    if (is(S::ground, C::friction_x, T::long_t, D::large_d, V::any, K::total))
        return -gv * lam2 * RI / (16.0 * kPi * kPi * O * O * std::pow(d, 4));

    // ---- plate, ground state, Casimir ---------------------------------------
    if (is(S::ground, C::casimir_z, T::short_t, D::small_d, V::any, K::total))
        return -d * dt * dt / std::pow(sig, 5) * RR * lam2 / (12.0 * kPi * kPi) *
                   (3.0 * std::sqrt(2.0 * kPi) + 4.0 * sig * O) +
               d * dt / std::pow(sig, 4) * 2.0 * lam2 / (3.0 * kPi * kPi) * RI;
    if (is(S::ground, C::casimir_z, T::short_t, D::large_d, V::any, K::total))
        return -O / std::pow(d, 3) * 7.0 * lam2 / (128.0 * kPi * kPi) * dt * dt * RR +
               dt / std::pow(d, 3) * 7.0 * lam2 / (64.0 * kPi * kPi) * RI;
    if (is(S::ground, C::casimir_z, T::long_t, D::small_d, V::any, K::total)) {
        const double bracket =
            0.5 * kSqrtPi - y + kSqrtPi * y * y +
            std::pow(y, 3) * std::exp(-y * y) *
                (special_eval(Fn::expint_Ei, y * y) -
                 kPi * special_eval(Fn::erfi, y));
        return -d / std::pow(sig, 3) * std::sqrt(2.0) * RR * lam2 /
               (3.0 * kPi * kPi) * bracket;
    }
    if (is(S::ground, C::casimir_z, T::long_t, D::large_d, V::small_v, K::total))
        return -RR * lam2 / (8.0 * kPi * kPi * O * std::pow(d, 3));
    if (is(S::ground, C::casimir_z, T::long_t, D::large_d, V::high_v, K::total))
        return -RR * lam2 / (16.0 * kPi * kPi * O * std::pow(d, 3));
    if (is(S::ground, C::casimir_z, T::long_t, D::pointlike, V::small_v, K::total)) {
        const double si = special_eval(Fn::Si, x);
        const double ci = special_eval(Fn::Ci, x);
        const double SI = kPi - 2.0 * si;
        const double bracket = SI * (x * std::sin(x) + std::cos(x)) -
                               2.0 * ci * (x * std::cos(x) - std::sin(x));
        return -RR * lam2 / (16.0 * kPi * kPi * d * d) * bracket;
    }

    // ---- plate, excited state, friction -------------------------------------
    if (is(S::excited, C::friction_x, T::short_t, D::small_d, V::any, K::total))
        return -gv * lam2 / (2.0 * kPi * kPi * std::pow(sig, 3)) *
               (RR * dt * std::sqrt(kPi / 2.0) +
                RI * dt * dt / sig * (1.0 - std::sqrt(kPi / 2.0) * sig * O / 2.0));
    if (is(S::excited, C::friction_x, T::short_t, D::large_d, V::any, K::total))
        return -gv * lam2 / (4.0 * kPi * kPi * std::pow(sig, 3)) *
               (RR * dt * std::sqrt(2.0 * kPi) * std::exp(-2.0 * d * d / (sig * sig)) -
                RI * std::pow(sig, 3) / (4.0 * std::pow(d, 4)) * dt * dt / 2.0);
    if (is(S::excited, C::friction_x, T::long_t, D::small_d, V::any, K::delta))
        return -gv * O * O * lam2 / (2.0 * kPi) * RR * W;
    if (is(S::excited, C::friction_x, T::long_t, D::small_d, V::any, K::pv))
        return gv * O * O * lam2 / (2.0 * kPi) * RI *
               meijer_reduced(MeijerKind::friction, y);
    if (is(S::excited, C::friction_x, T::long_t, D::large_d, V::any, K::pv))
        return -gv * O / d * lam2 / (4.0 * kPi) * RI * std::cos(x);
    if (is(S::excited, C::friction_x, T::long_t, D::large_d, V::any, K::delta))
        return -gv * O / d * lam2 / (4.0 * kPi) * RR * W * std::sin(x);

    // ---- plate, excited state, Casimir --------------------------------------
    if (is(S::excited, C::casimir_z, T::short_t, D::small_d, V::any, K::total))
        return d / std::pow(sig, 4) * lam2 / (3.0 * kPi * kPi) *
               (2.0 * RI * dt -
                RR * dt * dt / sig * (0.75 * std::sqrt(2.0 * kPi) - sig * O));
    if (is(S::excited, C::casimir_z, T::short_t, D::large_d, V::any, K::total))
        return -7.0 * lam2 / (64.0 * kPi * kPi * std::pow(d, 3)) *
               (RI * dt + RR * O * dt * dt / 2.0);
    if (is(S::excited, C::casimir_z, T::long_t, D::small_d, V::any, K::delta))
        return std::pow(O, 3) * d * lam2 / (3.0 * kPi) * RI * W;
    if (is(S::excited, C::casimir_z, T::long_t, D::small_d, V::any, K::pv))
        return std::pow(O, 3) * d * lam2 / (3.0 * kPi) * RR *
               meijer_reduced(MeijerKind::casimir, y);
    if (is(S::excited, C::casimir_z, T::long_t, D::large_d, V::any, K::delta))
        return -O / d * RI * lam2 / (4.0 * kPi) * W * std::cos(x);
    if (is(S::excited, C::casimir_z, T::long_t, D::large_d, V::any, K::pv))
        return -O / d * RR * lam2 / (4.0 * kPi) * std::sin(x);

    throw UnknownRegime("no catalogued formula for this regime key");
}

}  // namespace udw::asym
