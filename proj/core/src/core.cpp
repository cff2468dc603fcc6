#include "udw/core.hpp"

#include <cmath>

namespace udw {

void DetectorParams::validate() const {
    if (!(smearing_sigma > 0.0))
        throw InvalidSmearing("smearing_sigma must be > 0 (pointlike limits are closed-form only)");
    if (gap_omega < 0.0) throw Error("gap_omega must be >= 0");
    if (!(coupling_lambda > 0.0)) throw Error("coupling_lambda must be > 0");
    if (regulator_gamma < 0.0) throw Error("regulator_gamma must be >= 0");
}

double lorentz_gamma(double v) {
    if (!(std::abs(v) < 1.0))
        throw FasterThanLight("|v| must be < c");
    return 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
}

DimensionlessGroups to_dimensionless(const DetectorParams& params,
                                     const Boundary& boundary, double v,
                                     const SwitchingWindow& window) {
    params.validate();
    const double gamma = lorentz_gamma(v);  // rejects |v| >= c

    DimensionlessGroups g{};
    g.x_gap = params.smearing_sigma * params.gap_omega;
    g.y = g.x_gap / std::sqrt(2.0);
    g.t_gap = params.gap_omega * window.delta_tau;
    g.d_ratio = 0.0;
    if (const Plate* p = std::get_if<Plate>(&boundary))
        g.d_ratio = p->distance / params.smearing_sigma;
    g.beta_v = v;
    g.gamma_lorentz = gamma;
    return g;
}

DetectorState validate_state(const DetectorState& state) {
    const double a = state.excited_pop;
    if (!(a >= 0.0 && a <= 1.0))
        throw NotDensityMatrix("excited population a must lie in [0,1]");
    const double b2 = std::norm(state.coherence);
    if (b2 > a * (1.0 - a) + 1e-15)
        throw NotDensityMatrix("|b|^2 <= a(1-a) violated (matrix not positive semidefinite)");
    return state;
}

}  // namespace udw
