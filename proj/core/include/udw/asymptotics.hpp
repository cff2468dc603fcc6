#ifndef UDW_ASYMPTOTICS_HPP
#define UDW_ASYMPTOTICS_HPP

#include "udw/core.hpp"
#include "udw/quadrature.hpp"

// Closed-form asymptote catalogue for the free-space and plate forces, the
// special functions those formulas need, the two Meijer-G families realized
// as principal-value integrals, and the plate angular integrals with their
// large-distance limits. All values in natural units (hbar = c = 1).

namespace udw::asym {

enum class State { ground, excited };
enum class Component { friction_x, casimir_z };
enum class Time { short_t, long_t };
enum class Distance { small_d, large_d, pointlike, free_space };
enum class Velocity { small_v, high_v, any };
enum class Contribution { total, pv, delta };

struct RegimeKey {
    State state;
    Component component;
    Time time;
    Distance distance;
    Velocity velocity = Velocity::any;
    Contribution contribution = Contribution::total;

    bool operator==(const RegimeKey&) const = default;
};

enum class Fn {
    dawson,
    expint_Ei,
    erfi,
    Si,
    Ci,
    bessel_J0,
    bessel_J1,
    bessel_J2,
    erf
};

// Reference-quality special functions (<= 1e-12 relative for |x| <= 50).
// Throws DomainError outside a function's domain (e.g. Ci at x <= 0).
double special_eval(Fn fn, double x);

enum class MeijerKind { friction, casimir };

// The two fixed Meijer-G families, evaluated through the PV radial integral
// they resum (dimensionless, argument y = sigma Omega / (sqrt(2) c)):
//   friction: -PV int_0^inf s^2 e^{-s^2/2} / (s - Omega) ds / (pi Omega^2)
//   casimir:  -PV int_0^inf s^3 e^{-s^2/2} / (s - Omega) ds / (pi Omega^3)
// with Omega = sqrt(2) y. Limits: friction -> -1/(pi (sigma Omega)^2) and
// 1/(sqrt(2 pi) (sigma Omega)^3); casimir -> -1/(sqrt(2 pi) (sigma Omega)^3)
// and 2/(pi (sigma Omega)^4).
double meijer_reduced(MeijerKind kind, double y);

// Closed-form value of the catalogued limit identified by key. The formula is
// evaluated verbatim at the supplied parameters; validity-regime enforcement
// is advisory (callers plot these as curves outside their corners).
double asymptote(const RegimeKey& key, const DetectorParams& params, double v,
                 double d, complexd R, const SwitchingWindow& window);

enum class AngularKind { I0, I1 };
enum class AngularLimit { C0, C1 };

// Direct theta-quadrature of the plate angular integrals
//   I0 = int_0^pi dtheta sin cos (1 - v cos)^{-3} J0(2 dt sin/(gamma(1 - v cos)))
//   I1 = int_0^pi dtheta sin^2   (1 - v cos)^{-3} J1(2 dt sin/(gamma(1 - v cos)))
double angular_integral(AngularKind kind, double v, double dt,
                        const quad::ToleranceSpec& tol = {});

// Large-distance closed forms C0 = gamma^4 v sin(2dt)/dt, C1 = -gamma^3 cos(2dt)/dt.
double angular_limit_C(AngularLimit kind, double v, double dt);

}  // namespace udw::asym

#endif
