#ifndef UDW_CORE_HPP
#define UDW_CORE_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

// Shared physical types and validation. Everything downstream works in
// natural units (c = hbar = 1); SI values are converted at the boundary.

namespace udw {

using complexd = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FasterThanLight : Error { using Error::Error; };
struct InvalidSmearing : Error { using Error::Error; };
struct NotDensityMatrix : Error { using Error::Error; };
struct ZeroMomentum : Error { using Error::Error; };
struct PointBeyondPlate : Error { using Error::Error; };
struct PoleOutsideDomain : Error { using Error::Error; };
struct NonPositiveShell : Error { using Error::Error; };
struct NonFiniteIntegrand : Error { using Error::Error; };
struct IntegrationFailure : Error { using Error::Error; };
struct NormalizationMismatch : Error { using Error::Error; };
struct UnknownRegime : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

enum class UnitMode { natural, si };

struct PhysicalScales {
    double c = 1.0;     // speed of light
    double hbar = 1.0;  // reduced Planck constant
    UnitMode unit_mode = UnitMode::natural;
};

struct DetectorParams {
    double gap_omega = 1.0;        // energy gap Omega >= 0
    double smearing_sigma = 1.0;   // Gaussian smearing width sigma > 0
    double coupling_lambda = 1.0;  // coupling strength lambda > 0
    double regulator_gamma = 0.0;  // decay regulator Gamma >= 0

    void validate() const;
};

// Two-level density matrix [[a, b], [b*, 1-a]].
struct DetectorState {
    double excited_pop = 0.0;  // a in [0,1]
    complexd coherence = 0.0;  // b, |b|^2 <= a(1-a)
};

struct Plate {
    double distance = 1.0;     // d > 0, plate at z = d
    complexd reflection = 1.0; // R, |R| <= 1
};

struct Free {};

using Boundary = std::variant<Free, Plate>;

// Constant switching active since tau0; delta_tau = tau - tau0.
struct SwitchingWindow {
    double delta_tau = 0.0;
};

struct DimensionlessGroups {
    double y;              // sigma*Omega/(sqrt(2) c)
    double x_gap;          // sigma*Omega/c
    double t_gap;          // Omega*dtau
    double d_ratio;        // d/sigma (0 for free space)
    double beta_v;         // v_x/c
    double gamma_lorentz;  // (1 - v^2/c^2)^(-1/2)
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Collects the recurring dimensionless combinations. v in units of c.
DimensionlessGroups to_dimensionless(const DetectorParams& params,
                                     const Boundary& boundary, double v,
                                     const SwitchingWindow& window);

// Accepts iff [[a,b],[b*,1-a]] is a density matrix; throws NotDensityMatrix
// naming the violated constraint.
DetectorState validate_state(const DetectorState& state);

// gamma for |v| < 1; throws FasterThanLight otherwise.
double lorentz_gamma(double v);

}  // namespace udw

#endif
