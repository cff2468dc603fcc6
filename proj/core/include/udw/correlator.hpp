#ifndef UDW_CORRELATOR_HPP
#define UDW_CORRELATOR_HPP

#include "udw/core.hpp"
#include "udw/lorentz.hpp"

// Mode functions and mode-resolved two-point correlators for free space and
// for a reflecting plate at z = d (Lippmann-Schwinger / method of images).

namespace udw::corr {

using lorentz::FourVector;
using lorentz::Vec3;

struct ModeLabel {
    Vec3 k{};
    double norm() const;  // |k|, throws ZeroMomentum if not > 0
};

// The factor [1 - R e^{2 i k_z d}] at fixed k.
struct PlateKernel {
    complexd value;
};

// u_k(x) = e^{i(|k| t - k.x)} / sqrt(2 (2pi)^3 |k|), x = (t, x, y, z) upper.
complexd plane_wave_mode(const ModeLabel& k, const FourVector& x);

// u_k*(x1) u_k(x2); Hermitian under argument swap.
complexd free_wightman_k(const ModeLabel& k, const FourVector& x1,
                         const FourVector& x2);

PlateKernel plate_kernel(const ModeLabel& k, double d, complexd R);

// Diagonal plane-wave T-matrix coefficient -(2pi)^3 R; the same-momentum
// (delta) structure is a marker, not a value.
struct TMatrixCoeff {
    complexd coefficient;
    bool same_momentum;
};
TMatrixCoeff tmatrix_plate(const ModeLabel& k, const ModeLabel& kp, complexd R);

// Plate-corrected kernel by the method of images:
//   G_k = free(r0, r1) - R * free(r0, mirror(r1)),
// mirror reflecting through z = d. Equals free_wightman_k times
// plate_kernel evaluated with k_z flipped at distance d - z1 (exact), and
// vanishes on the plate surface (z1 = d) for R = 1.
complexd image_wightman_k(const ModeLabel& k, const FourVector& r0,
                          const FourVector& r1, double d, complexd R);

}  // namespace udw::corr

#endif
