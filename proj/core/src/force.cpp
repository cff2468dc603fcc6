#include "udw/force.hpp"

#include <cmath>
#include <gsl/gsl_sf_bessel.h>

#include <algorithm>
#include <numbers>

namespace udw::force {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(dtau C)/C, smooth through C = 0.
double h1_kernel(double C, double dtau) {
    const double x = dtau * C;
    if (std::abs(x) < 1e-6) return dtau * (1.0 - x * x / 6.0);
    return std::sin(x) / C;
}

// (1 - cos(dtau C))/C, smooth through C = 0.
double h2_kernel(double C, double dtau) {
    const double x = dtau * C;
    if (std::abs(x) < 1e-6) return 0.5 * dtau * x * (1.0 - x * x / 12.0);
    return (1.0 - std::cos(x)) / C;
}

// sin(z)/z and its J1-moment partner, stable near z = 0.
double sinc(double z) {
    if (std::abs(z) < 1e-4) return 1.0 - z * z / 6.0;
    return std::sin(z) / z;
}

// 2 (sin z - z cos z)/z^2, stable near z = 0 (series z/3 - z^3/30 + ...).
double j1_moment(double z) {
    if (std::abs(z) < 1e-2) {
        const double z2 = z * z;
        return 2.0 * z * (1.0 / 3.0 - z2 / 30.0 + z2 * z2 / 840.0);
    }
    return 2.0 * (std::sin(z) - z * std::cos(z)) / (z * z);
}

// Closed-form angular factors of the plate integrand (aberration + Bessel
// moments); the 1/gamma^3 of the overall prefactor is already absorbed:
//   T00 = gamma sin(2ds)/(ds)         (time component)
//   T0x = gamma v sin(2ds)/(ds)       (friction component)
//   T1z = [sin(2ds) - 2ds cos(2ds)]/(2 d^2 s^2)  (Casimir component, no v)
struct AngularFactors {
    double t00, t0x, t1z;
};

AngularFactors angular_factors(double s, double d, double v, double gamma) {
    const double z = 2.0 * d * s;
    const double sz = 2.0 * sinc(z);  // = sin(2ds)/(ds)
    return {gamma * sz, gamma * v * sz, j1_moment(z)};
}

double radial_cutoff(const DetectorParams& p, double omega_eff) {
    return 12.0 / p.smearing_sigma + 1.5 * std::abs(omega_eff) +
           40.0 * p.regulator_gamma;
}

// Oscillation-resolving initial subdivision: multiples of pi/scale up to smax.
std::vector<double> oscillation_breakpoints(double scale, double smax) {
    std::vector<double> bp;
    if (!(scale > 0.0)) return bp;
    const double step = kPi / scale;
    const long count = std::min<long>(20000, (long)std::floor(smax / step));
    bp.reserve(count);
    for (long i = 1; i <= count; ++i) bp.push_back(i * step);
    return bp;
}

struct ChannelTols {
    quad::ToleranceSpec radial;
    quad::ToleranceSpec angular;
};

ChannelTols split_tols(const quad::ToleranceSpec& tol) {
    ChannelTols t{tol, tol};
    // the product rule multiplies relative errors; halve each budget
    t.radial.rel_tol = 0.5 * tol.rel_tol;
    t.angular.rel_tol = 0.5 * tol.rel_tol;
    return t;
}

// ---------------------------------------------------------------------------
// Free space
// ---------------------------------------------------------------------------

// One detector channel (omega_eff = +Omega ground, -Omega excited):
//   F_mu = -(lambda^2/8 pi^3) [int dOmega w_mu /(gamma(1-v u))^3]
//          * int_0^smax ds s^2 e^{-sigma^2 s^2/2} h1(omega_eff + s).
// The radial integrand is angle-independent, so the 3-D integral factorizes
// into integrate_sphere x integrate_1d exactly.
ForceComponents free_channel(const DetectorParams& p, double omega_eff, double v,
                             const SwitchingWindow& w, const quad::ToleranceSpec& tol) {
    const double gamma = lorentz_gamma(v);
    const double sig2 = p.smearing_sigma * p.smearing_sigma;
    const double smax = radial_cutoff(p, omega_eff);
    const ChannelTols ct = split_tols(tol);

    auto radial = quad::integrate_1d(
        [&](double s) {
            return s * s * std::exp(-0.5 * sig2 * s * s) *
                   h1_kernel(omega_eff + s, w.delta_tau);
        },
        0.0, smax, ct.radial, oscillation_breakpoints(w.delta_tau, smax));

    // pack (w_t, w_x) and (w_y, w_z) as the real/imag parts of two calls
    auto ang_tx = quad::integrate_sphere(
        [&](double theta, double) -> complexd {
            const double u = std::cos(theta);
            const double den = gamma * (1.0 - v * u);
            const double jac = 1.0 / (den * den * den);
            return complexd(-1.0, u) * jac;
        },
        ct.angular);
    // the transverse integrals vanish identically, so a purely relative
    // tolerance can never be met; anchor them to the timelike scale instead
    quad::ToleranceSpec yz_tol = ct.angular;
    yz_tol.abs_tol = std::max(yz_tol.abs_tol,
                              yz_tol.rel_tol * std::abs(ang_tx.value.real()));
    auto ang_yz = quad::integrate_sphere(
        [&](double theta, double phi) -> complexd {
            const double u = std::cos(theta);
            const double den = gamma * (1.0 - v * u);
            const double jac = 1.0 / (den * den * den);
            const double st = std::sin(theta);
            return complexd(st * std::sin(phi), st * std::cos(phi)) * jac;
        },
        yz_tol);

    const double lam2 = p.coupling_lambda * p.coupling_lambda;
    const double pref = -lam2 / (8.0 * kPi * kPi * kPi);

    ForceComponents F;
    const double ang[4] = {ang_tx.value.real(), ang_tx.value.imag(),
                           ang_yz.value.real(), ang_yz.value.imag()};
    const double ang_err[4] = {ang_tx.error_estimate, ang_tx.error_estimate,
                               ang_yz.error_estimate, ang_yz.error_estimate};
    for (int mu = 0; mu < 4; ++mu) {
        F.F[mu] = pref * ang[mu] * radial.value;
        F.err[mu] = std::abs(pref) * (ang_err[mu] * std::abs(radial.value) +
                                      std::abs(ang[mu]) * radial.error_estimate);
    }
    F.converged = radial.converged && ang_tx.converged && ang_yz.converged;
    return F;
}

// ---------------------------------------------------------------------------
// Plate correction
// ---------------------------------------------------------------------------

// Radial kernels per component after the analytic angular reduction:
//   dF_x = +(lambda^2/4 pi^2) int ds s^2 W [-R_R k1 - R_I k2] T0x
//   dF_t = -(lambda^2/4 pi^2) int ds s^2 W [-R_R k1 - R_I k2] T00
//   dF_z = +(lambda^2/4 pi^2) int ds s^2 W [ R_I k1 - R_R k2] T1z
// with (k1, k2) = (h1, h2) at finite time and (pi delta, PV 1/C) in the
// long-time limit; a regulator Gamma > 0 smooths these into the Lorentzian
// pair (Gamma/(Gamma^2+C^2), C/(Gamma^2+C^2)).
struct PlateChannel {
    ForceComponents pv;     // principal-value (or smooth) part
    ForceComponents delta;  // on-shell part (long time, omega_eff < 0 only)
};

PlateChannel plate_channel(const DetectorParams& p, double omega_eff, double v,
                           const Plate& plate, const SwitchingWindow& w,
                           Regime regime, const quad::ToleranceSpec& tol) {
    const double gamma = lorentz_gamma(v);
    const double sig2 = p.smearing_sigma * p.smearing_sigma;
    const double d = plate.distance;
    const double RR = plate.reflection.real();
    const double RI = plate.reflection.imag();
    const double lam2 = p.coupling_lambda * p.coupling_lambda;
    const double pref = lam2 / (4.0 * kPi * kPi);
    const double smax = radial_cutoff(p, omega_eff);

    PlateChannel out;
    if (RR == 0.0 && RI == 0.0) return out;

    // component sign x weight selectors: {t, x, z}; F_y = 0 exactly
    struct Comp {
        int mu;
        double sign;  // overall sign of the (lambda^2/4pi^2) prefactor
    };
    const Comp comps[3] = {{0, -1.0}, {1, +1.0}, {3, +1.0}};

    auto weight = [&](double s, int mu) {
        const AngularFactors a = angular_factors(s, d, v, gamma);
        return mu == 0 ? a.t00 : (mu == 1 ? a.t0x : a.t1z);
    };
    auto envelope = [&](double s) { return s * s * std::exp(-0.5 * sig2 * s * s); };
    // coefficient of the k1 (resonant) and k2 (reactive) kernels per component
    auto k1_coef = [&](int mu) { return mu == 3 ? RI : -RR; };
    auto k2_coef = [&](int mu) { return mu == 3 ? -RR : -RI; };

    const double osc_scale =
        2.0 * d + (regime == Regime::finite_time ? w.delta_tau : 0.0);
    const std::vector<double> bp = oscillation_breakpoints(osc_scale, smax);

    if (regime == Regime::finite_time) {
        for (const Comp& c : comps) {
            auto r = quad::integrate_1d(
                [&](double s) {
                    const double C = omega_eff + s;
                    return envelope(s) * weight(s, c.mu) *
                           (k1_coef(c.mu) * h1_kernel(C, w.delta_tau) +
                            k2_coef(c.mu) * h2_kernel(C, w.delta_tau));
                },
                0.0, smax, tol, bp);
            out.pv.F[c.mu] = c.sign * pref * r.value;
            out.pv.err[c.mu] = pref * r.error_estimate;
            out.pv.converged = out.pv.converged && r.converged;
        }
        return out;
    }

    if (p.regulator_gamma > 0.0) {
        // Lorentzian-regulated long time: both kernels smooth
        const double G = p.regulator_gamma;
        for (const Comp& c : comps) {
            auto r = quad::integrate_1d(
                [&](double s) {
                    const double C = omega_eff + s;
                    const double den = G * G + C * C;
                    return envelope(s) * weight(s, c.mu) *
                           (k1_coef(c.mu) * G / den + k2_coef(c.mu) * C / den);
                },
                0.0, smax, tol, bp);
            out.pv.F[c.mu] = c.sign * pref * r.value;
            out.pv.err[c.mu] = pref * r.error_estimate;
            out.pv.converged = out.pv.converged && r.converged;
        }
        return out;
    }

    // sharp long time: k1 -> pi delta(C), k2 -> PV 1/C
    const double pole = -omega_eff;  // C = 0 at s = -omega_eff
    for (const Comp& c : comps) {
        auto f = [&](double s) { return envelope(s) * weight(s, c.mu); };
        quad::QuadratureResult<double> r;
        if (pole > 0.0 && pole < smax) {
            r = quad::integrate_pv(f, pole, 0.0, smax, tol);
        } else {
            r = quad::integrate_1d([&](double s) { return f(s) / (omega_eff + s); },
                                   0.0, smax, tol, bp);
        }
        out.pv.F[c.mu] = c.sign * pref * k2_coef(c.mu) * r.value;
        out.pv.err[c.mu] = pref * std::abs(k2_coef(c.mu)) * r.error_estimate;
        out.pv.converged = out.pv.converged && r.converged;
    }

    if (pole > 0.0) {
        // on-shell channel at s* = -omega_eff, evaluated on the resonance
        // surface; sin(theta') = sin(theta)/(gamma(1 - v cos(theta)))
        const double s_star = pole;
        const double W = std::exp(-0.5 * sig2 * s_star * s_star);
        auto bessel_arg = [&](double theta) {
            return 2.0 * d * s_star * std::sin(theta) /
                   (gamma * (1.0 - v * std::cos(theta)));
        };
        auto o_tx = quad::onshell_surface_integral(
            [&](double theta, double) -> complexd {
                const double j0 = gsl_sf_bessel_J0(bessel_arg(theta));
                return complexd(j0, std::cos(theta) * j0);
            },
            s_star, v, tol);
        auto o_z = quad::onshell_surface_integral(
            [&](double theta, double) -> complexd {
                return std::sin(theta) * gsl_sf_bessel_J1(bessel_arg(theta));
            },
            s_star, v, tol);
        // onshell = 2 pi s*^2 T_mu(s*); fold pi delta and the 1/(2 pi)
        const double dpref = lam2 / (8.0 * kPi * kPi) * W;
        out.delta.F[0] = -dpref * (-RR) * o_tx.value.real();
        out.delta.F[1] = dpref * (-RR) * o_tx.value.imag();
        out.delta.F[3] = dpref * RI * o_z.value.real();
        out.delta.err[0] = dpref * std::abs(RR) * o_tx.error_estimate;
        out.delta.err[1] = dpref * std::abs(RR) * o_tx.error_estimate;
        out.delta.err[3] = dpref * std::abs(RI) * o_z.error_estimate;
        out.delta.converged = o_tx.converged && o_z.converged;
    }
    return out;
}

ForceComponents add(const ForceComponents& a, const ForceComponents& b) {
    ForceComponents r;
    for (int mu = 0; mu < 4; ++mu) {
        r.F[mu] = a.F[mu] + b.F[mu];
        r.err[mu] = std::hypot(a.err[mu], b.err[mu]);
    }
    r.converged = a.converged && b.converged;
    return r;
}

void validate_plate(const Plate& plate) {
    if (!(plate.distance > 0.0)) throw Error("plate distance must be > 0");
    if (std::abs(plate.reflection) > 1.0 + 1e-12)
        throw Error("|reflection| must be <= 1");
}

}  // namespace

double gaussian_smearing_ft(const lorentz::FourVector& k_tilde, double sigma) {
    if (!(sigma > 0.0)) throw InvalidSmearing("sigma must be > 0");
    const double k2 =
        k_tilde[1] * k_tilde[1] + k_tilde[2] * k_tilde[2] + k_tilde[3] * k_tilde[3];
    return std::exp(-0.5 * sigma * sigma * k2);
}

complexd beta_factor(complexd omega_eff, double ck0_tilde, double delta_tau) {
    const complexd C = omega_eff - ck0_tilde;
    const complexd x = C * delta_tau;
    if (std::abs(x) < 1e-6) {
        // beta = int_0^dtau e^{-iCt} dt, expanded about resonance
        return delta_tau * (1.0 - complexd(0.0, 0.5) * x - x * x / 6.0);
    }
    return complexd(0.0, 1.0) * (std::exp(complexd(0.0, -1.0) * x) - 1.0) / C;
}

AlphaSplit alpha_split(double omega, double ck0_tilde, double gamma) {
    if (gamma < 0.0) throw Error("regulator gamma must be >= 0");
    AlphaSplit a;
    a.gamma = gamma;
    a.shell = -omega;
    const double C = omega - ck0_tilde;
    if (gamma > 0.0) {
        const double den = gamma * gamma + C * C;
        a.alpha_r = C / den;
        a.alpha_i = -gamma / den;
        a.distributional = false;
    } else {
        a.alpha_r = (C != 0.0) ? 1.0 / C : 0.0;  // PV kernel
        a.alpha_i = 0.0;
        a.distributional = true;
    }
    return a;
}

ForceComponents force_free(const DetectorParams& params, const DetectorState& state,
                           double v, const SwitchingWindow& window,
                           const quad::ToleranceSpec& tol) {
    params.validate();
    validate_state(state);
    const double O = params.gap_omega;
    const double a = state.excited_pop;
    // coherence never enters: the monopole coupling is diagonal in energy
    if (a == 0.0) return free_channel(params, +O, v, window, tol);
    if (a == 1.0) return free_channel(params, -O, v, window, tol);
    return mix_force(a, free_channel(params, +O, v, window, tol),
                     free_channel(params, -O, v, window, tol));
}

double force_free_reduced_ground(const DetectorParams& params, double v,
                                 const SwitchingWindow& window,
                                 const quad::ToleranceSpec& tol) {
    params.validate();
    const double gamma = lorentz_gamma(v);
    const double O = params.gap_omega;
    const double sig2 = params.smearing_sigma * params.smearing_sigma;
    const double lam2 = params.coupling_lambda * params.coupling_lambda;
    const double smax = radial_cutoff(params, O);
    auto r = quad::integrate_1d(
        [&](double k) {
            return k * k * std::exp(-0.5 * sig2 * k * k) *
                   h1_kernel(k + O, window.delta_tau);
        },
        0.0, smax, tol, oscillation_breakpoints(window.delta_tau, smax));
    return -gamma * v * lam2 / (2.0 * kPi * kPi) * r.value;
}

ForceComponents force_plate(const DetectorParams& params, const DetectorState& state,
                            double v, const Plate& plate, const SwitchingWindow& window,
                            Regime regime, const quad::ToleranceSpec& tol) {
    params.validate();
    validate_state(state);
    validate_plate(plate);
    const double O = params.gap_omega;
    const double a = state.excited_pop;
    auto channel = [&](double omega_eff) {
        PlateChannel c = plate_channel(params, omega_eff, v, plate, window, regime, tol);
        return add(c.pv, c.delta);
    };
    if (a == 0.0) return channel(+O);
    if (a == 1.0) return channel(-O);
    return mix_force(a, channel(+O), channel(-O));
}

PlateSplit force_plate_split(const DetectorParams& params, const DetectorState& state,
                             double v, const Plate& plate,
                             const quad::ToleranceSpec& tol) {
    params.validate();
    validate_state(state);
    validate_plate(plate);
    // the split is the Gamma -> 0 decomposition; a finite regulator has no
    // sharp on-shell part to separate
    DetectorParams p0 = params;
    p0.regulator_gamma = 0.0;
    const double O = p0.gap_omega;
    const double a = state.excited_pop;
    const SwitchingWindow w{};  // long time: window scale is immaterial

    PlateChannel g = plate_channel(p0, +O, v, plate, w, Regime::long_time, tol);
    PlateChannel e = plate_channel(p0, -O, v, plate, w, Regime::long_time, tol);

    PlateSplit s;
    s.pv = mix_force(a, g.pv, e.pv);
    s.delta = mix_force(a, g.delta, e.delta);
    s.total = add(s.pv, s.delta);
    return s;
}

ForceComponents mix_force(double a, const ForceComponents& F_ground,
                          const ForceComponents& F_excited) {
    if (F_ground.normalization != F_excited.normalization)
        throw NormalizationMismatch("cannot mix differently normalized forces");
    if (!(a >= 0.0 && a <= 1.0))
        throw NotDensityMatrix("excited population a must lie in [0,1]");
    ForceComponents r;
    r.normalization = F_ground.normalization;
    for (int mu = 0; mu < 4; ++mu) {
        r.F[mu] = (1.0 - a) * F_ground.F[mu] + a * F_excited.F[mu];
        r.err[mu] = std::hypot((1.0 - a) * F_ground.err[mu], a * F_excited.err[mu]);
    }
    r.converged = F_ground.converged && F_excited.converged;
    return r;
}

double normalization_divisor(Normalization n, const DetectorParams& params,
                             double v, double d) {
    const double lam2 = params.coupling_lambda * params.coupling_lambda;
    const double O = params.gap_omega;
    switch (n) {
        case Normalization::raw_natural:
            return 1.0;
        case Normalization::friction_units: {
            if (v == 0.0) throw Error("friction normalization undefined at v = 0");
            const double gamma = lorentz_gamma(v);
            return lam2 * O * O * gamma * v / (2.0 * kPi * kPi);
        }
        case Normalization::casimir_units: {
            if (!(O > 0.0 && d > 0.0))
                throw Error("casimir normalization requires Omega > 0 and d > 0");
            return lam2 / (8.0 * kPi * kPi * O * d * d * d);
        }
    }
    throw UnknownRegime("unknown normalization");
}

}  // namespace udw::force
