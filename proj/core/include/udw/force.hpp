#ifndef UDW_FORCE_HPP
#define UDW_FORCE_HPP

#include <array>

#include "udw/core.hpp"
#include "udw/lorentz.hpp"
#include "udw/quadrature.hpp"

// Four-force assembly for an inertial detector, leading perturbative order.
// All outputs are in natural units (hbar = c = 1) with lambda^2 explicit.
//
// Working variables: with velocity v along x and u = cos(theta),
//   s = gamma |k| (1 - v u)            (boosted frequency, s = -c k~_0)
//   C = Omega_eff + s                  (resonance variable; Omega_eff = +Omega
//                                       for the ground channel, -Omega excited)
// The finite-time kernels are
//   h1(C) = sin(dtau C)/C,   h2(C) = (1 - cos(dtau C))/C,
// both smooth; in the long-time limit h1 -> pi delta(C) and h2 -> PV 1/C,
// which reproduces the PV + on-shell split for both detector states.

namespace udw::force {

enum class Normalization { raw_natural, friction_units, casimir_units };
enum class Regime { finite_time, long_time };

struct ForceComponents {
    std::array<double, 4> F{};    // (t, x, y, z)
    std::array<double, 4> err{};  // per-component quadrature error estimate
    Normalization normalization = Normalization::raw_natural;
    bool converged = true;  // false <=> some quadrature hit ToleranceNotMet
};

// Squared-profile smearing weight e^{-sigma^2 ktilde^2 / 2}; ktilde^2 uses the
// boosted spatial components. This is |f_bar|^2 for the true Gaussian FT
// f_bar = e^{-sigma^2 k^2/4} and enters every force integrand exactly once.
double gaussian_smearing_ft(const lorentz::FourVector& k_tilde, double sigma);

// beta(Omega, tau) = i alpha (-1 + e^{-i dtau (omega_eff - ck0_tilde)}) with
// alpha = 1/(omega_eff - ck0_tilde); continuous (-> dtau) at resonance.
// omega_eff may carry +i Gamma.
complexd beta_factor(complexd omega_eff, double ck0_tilde, double delta_tau);

// Distributional split of alpha = 1/(omega + i Gamma - ck0_tilde).
struct AlphaSplit {
    double alpha_r = 0.0;      // Gamma > 0: C/(Gamma^2 + C^2); Gamma = 0: PV kernel 1/C
    double alpha_i = 0.0;      // Gamma > 0: -Gamma/(Gamma^2 + C^2); 0 in the PV limit
    bool distributional = false;  // Gamma = 0: alpha_i is -pi sgn(omega) delta(C)
    double shell = 0.0;           // s* = -omega; reachable (delta fires) iff shell > 0
    double gamma = 0.0;
};
AlphaSplit alpha_split(double omega, double ck0_tilde, double gamma);

// Free-space four-force at finite window, 3-D momentum integral evaluated as
// integrate_sphere x integrate_1d in the boosted radial variable s.
ForceComponents force_free(const DetectorParams& params, const DetectorState& state,
                           double v, const SwitchingWindow& window,
                           const quad::ToleranceSpec& tol = {});

// Ground-state reduced 1-D form:
//   F_x = -gamma v (lambda^2 / 2 pi^2) int dk k^2 e^{-k^2 sigma^2/2}
//         sin(dtau (k + Omega)) / (k + Omega).
double force_free_reduced_ground(const DetectorParams& params, double v,
                                 const SwitchingWindow& window,
                                 const quad::ToleranceSpec& tol = {});

// Plate correction deltaF. finite_time uses the exact oscillatory kernels;
// long_time uses the PV channel plus (excited only) the on-shell delta channel.
ForceComponents force_plate(const DetectorParams& params, const DetectorState& state,
                            double v, const Plate& plate, const SwitchingWindow& window,
                            Regime regime, const quad::ToleranceSpec& tol = {});

// Long-time plate split, exposed for validation against the closed forms.
struct PlateSplit {
    ForceComponents pv;
    ForceComponents delta;
    ForceComponents total;
};
PlateSplit force_plate_split(const DetectorParams& params, const DetectorState& state,
                             double v, const Plate& plate,
                             const quad::ToleranceSpec& tol = {});

// (1-a) F_ground + a F_excited with errors combined in quadrature.
ForceComponents mix_force(double a, const ForceComponents& F_ground,
                          const ForceComponents& F_excited);

// Divisors for the non-raw normalizations (see README):
//   friction_units: hbar lambda^2 Omega^2 gamma (v/c) / (2 pi^2 c)
//   casimir_units:  hbar c^2 lambda^2 / (8 pi^2 Omega d^3)
double normalization_divisor(Normalization n, const DetectorParams& params,
                             double v, double d);

}  // namespace udw::force

#endif
