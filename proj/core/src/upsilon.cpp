#include "udw/upsilon.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace udw::ups {

using lorentz::FourVector;
using lorentz::Mat4;

complexd upsilon_general(const lorentz::TrajectorySpec& traj,
                         const DetectorParams& params, const corr::ModeLabel& k,
                         double tau, double tau0, const quad::ToleranceSpec& tol) {
    params.validate();
    if (!(tau >= tau0)) throw Error("tau must be >= tau0");
    if (tau == tau0) return 0.0;

    const double kn = k.norm();
    // lower-index momentum (-|k|, k)
    const double k_lo[4] = {-kn, k.k[0], k.k[1], k.k[2]};
    const FourVector x0 = lorentz::worldline(traj, tau0);

    auto integrand = [&](double tp) -> complexd {
        const FourVector x = lorentz::worldline(traj, tp);
        const Mat4 frame = lorentz::trajectory_frame(traj, tp);
        FourVector ktilde{};
        for (int nu = 0; nu < 4; ++nu) {
            double s = 0.0;
            for (int mu = 0; mu < 4; ++mu) s += k_lo[mu] * frame.m[mu][nu];
            ktilde[nu] = s;
        }
        const double W = force::gaussian_smearing_ft(ktilde, params.smearing_sigma);
        double phase = -params.gap_omega * (tp - tau0);
        for (int mu = 0; mu < 4; ++mu) phase += k_lo[mu] * (x[mu] - x0[mu]);
        return W * std::exp(complexd(0.0, phase));
    };

    // phase rate is at most Omega + 2 gamma |k|; pre-split at that scale
    double gmax = 1.0;
    if (const auto* in = std::get_if<lorentz::Inertial>(&traj)) {
        const double vn = std::sqrt(in->v[0] * in->v[0] + in->v[1] * in->v[1] +
                                    in->v[2] * in->v[2]);
        gmax = lorentz_gamma(vn);
    } else {
        gmax = 10.0;  // conservative bound for generic histories
    }
    const double rate = params.gap_omega + 2.0 * gmax * kn;
    std::vector<double> bp;
    if (rate > 0.0) {
        const double step = std::numbers::pi / rate;
        const long n = std::min<long>(20000, (long)((tau - tau0) / step));
        for (long i = 1; i <= n; ++i) bp.push_back(tau0 + i * step);
    }
    auto r = quad::integrate_1d_c(integrand, tau0, tau, tol, bp);
    if (!r.converged)
        throw IntegrationFailure("upsilon_general quadrature did not converge");
    return r.value;
}

complexd upsilon_inertial(const DetectorParams& params, double v,
                          const corr::ModeLabel& k, const SwitchingWindow& window) {
    params.validate();
    const FourVector kt = lorentz::tilde_momentum(k.k, v);
    const double W = force::gaussian_smearing_ft(kt, params.smearing_sigma);
    return W * force::beta_factor(params.gap_omega, kt[0], window.delta_tau);
}

}  // namespace udw::ups
