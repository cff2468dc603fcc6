#ifndef UDW_UPSILON_HPP
#define UDW_UPSILON_HPP

#include "udw/core.hpp"
#include "udw/correlator.hpp"
#include "udw/force.hpp"
#include "udw/lorentz.hpp"
#include "udw/quadrature.hpp"

// The trajectory kernel Upsilon(Omega, tau): the switched, smeared phase
// history of one mode along the detector worldline,
//   Upsilon = int_{tau0}^{tau} dtau' W(k~(tau')) e^{-i Omega (tau'-tau0)}
//             e^{+i k_mu (x^mu(tau') - x^mu(tau0))},
// with W the Gaussian smearing weight at the instantaneous comoving momentum
// k~_j = k_mu Lambda^mu_j(tau'). For inertial motion this factorizes exactly
// into gaussian_smearing_ft(k~, sigma) * beta_factor(Omega, c k~_0, dtau).

namespace udw::ups {

complexd upsilon_general(const lorentz::TrajectorySpec& traj,
                         const DetectorParams& params, const corr::ModeLabel& k,
                         double tau, double tau0,
                         const quad::ToleranceSpec& tol = {});

complexd upsilon_inertial(const DetectorParams& params, double v,
                          const corr::ModeLabel& k, const SwitchingWindow& window);

}  // namespace udw::ups

#endif
