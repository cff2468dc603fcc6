#ifndef UDW_LORENTZ_HPP
#define UDW_LORENTZ_HPP

#include <array>
#include <functional>
#include <variant>

#include "udw/core.hpp"

// Lorentz kinematics: generators, boosts, the momentum pullback k~, and
// worldline integration for general rapidity/rotation histories.
//
// Metric signature (-,+,+,+); k_mu = (-|k|, k).
// Matrices are stored as entries[mu][nu] with mu the lab index (row) and nu
// the comoving index (column), i.e. dx_lab^mu = Lambda^mu_nu dxi^nu.

namespace udw::lorentz {

using Vec3 = std::array<double, 3>;

struct Mat4 {
    double m[4][4] = {};

    static Mat4 identity();
    Mat4 operator*(const Mat4& o) const;
    std::array<double, 4> column(int j) const;
};

// Components with stated covariance; by convention positions are upper-index
// (ct, x, y, z) and momenta lower-index (-|k|, k).
struct FourVector {
    std::array<double, 4> v{};
    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }
};

struct GeneratorSet {
    std::array<Mat4, 3> K;  // boost generators (symmetric)
    std::array<Mat4, 3> J;  // rotation generators (antisymmetric spatial block)
};

struct Inertial {
    Vec3 v{};  // 3-velocity in units of c, |v| < 1
};

struct General {
    std::function<Vec3(double)> zeta_of_t;   // rapidity history zeta(tau)
    std::function<Vec3(double)> theta_of_t;  // rotation history theta(tau)
    double tau0 = 0.0;
};

using TrajectorySpec = std::variant<Inertial, General>;

// Real generator realization: exp(zeta . B) is the textbook boost with
// Lambda^0_0 = gamma, Lambda^0_j = +gamma v_j; exp(theta . R) a right-handed
// spatial rotation. Validated through the metric/commutator invariants.
const GeneratorSet& generators();

// Standard boost block form gamma, gamma v^i, delta_ij + (gamma-1) v_i v_j / v^2.
Mat4 boost_matrix(const Vec3& v);

// exp(zeta.B + theta.R) via scaling-and-squaring; for theta = 0 equals
// boost_matrix(tanh|zeta| zhat).
Mat4 instantaneous_lorentz(const Vec3& zeta, const Vec3& theta);

// Pullback of a null momentum to the comoving frame, velocity along x:
// k~_0 = -gamma(|k| - v k_x), k~_x = gamma(k_x - v |k|), transverse unchanged.
FourVector tilde_momentum(const Vec3& k, double v);

// Center-of-mass worldline x^mu(tau). Inertial: (gamma tau, gamma v tau).
// General: integrates column 0 of Lambda(tau') with an adaptive RK45.
FourVector worldline(const TrajectorySpec& traj, double tau);

// x^mu = x_cm^mu(tau) + Lambda^mu_j(tau) xi^j.
FourVector comoving_to_lab(const TrajectorySpec& traj, double tau, const Vec3& xi);

Mat4 trajectory_frame(const TrajectorySpec& traj, double tau);

double minkowski_dot(const FourVector& upper_a, const FourVector& upper_b);

}  // namespace udw::lorentz

#endif
