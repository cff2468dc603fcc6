#include "udw/correlator.hpp"

#include <cmath>
#include <numbers>

namespace udw::corr {

double ModeLabel::norm() const {
    const double n = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    if (!(n > 0.0)) throw ZeroMomentum("|k| must be > 0");
    return n;
}

complexd plane_wave_mode(const ModeLabel& k, const FourVector& x) {
    const double kn = k.norm();
    const double phase = kn * x[0] - (k.k[0] * x[1] + k.k[1] * x[2] + k.k[2] * x[3]);
    const double nrm =
        1.0 / std::sqrt(2.0 * std::pow(2.0 * std::numbers::pi, 3) * kn);
    return nrm * std::exp(complexd(0.0, phase));
}

complexd free_wightman_k(const ModeLabel& k, const FourVector& x1,
                         const FourVector& x2) {
    return std::conj(plane_wave_mode(k, x1)) * plane_wave_mode(k, x2);
}

PlateKernel plate_kernel(const ModeLabel& k, double d, complexd R) {
    if (!(d > 0.0)) throw Error("plate distance must be > 0");
    k.norm();  // validates |k| > 0
    return {1.0 - R * std::exp(complexd(0.0, 2.0 * k.k[2] * d))};
}

TMatrixCoeff tmatrix_plate(const ModeLabel& k, const ModeLabel& kp, complexd R) {
    const bool same = k.k == kp.k;
    if (!same) return {0.0, false};
    return {-std::pow(2.0 * std::numbers::pi, 3) * R, true};
}

complexd image_wightman_k(const ModeLabel& k, const FourVector& r0,
                          const FourVector& r1, double d, complexd R) {
    if (r0[3] > d || r1[3] > d)
        throw PointBeyondPlate("both points must lie on the detector side (z <= d)");
    FourVector mirrored = r1;
    mirrored[3] = 2.0 * d - r1[3];  // reflection through the plate plane z = d
    return free_wightman_k(k, r0, r1) - R * free_wightman_k(k, r0, mirrored);
}

}  // namespace udw::corr
