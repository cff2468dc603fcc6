#ifndef UDW_QUADRATURE_HPP
#define UDW_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "udw/core.hpp"

// Deterministic numeric integration engines: adaptive Gauss-Kronrod in 1-D
// (finite or semi-infinite domains), Cauchy principal values by symmetric
// subtraction, a Gauss-Legendre x trapezoid product rule on the sphere, and
// on-shell (delta-supported) surface integrals.

namespace udw::quad {

struct ToleranceSpec {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    long max_evals = 2000000;
};

template <typename T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;  // false <=> ToleranceNotMet (best value still returned)
};

namespace detail {

// 15-point Kronrod nodes with the embedded 7-point Gauss rule.
inline constexpr double kGK15X[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15WK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGK15WG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const complexd& x) { return std::abs(x); }

template <typename T, typename F>
void gk15(const F& f, double a, double b, T& value, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T resk{}, resg{};
    for (int i = 0; i < 8; ++i) {
        if (i < 7) {
            const T f1 = f(c - h * kGK15X[i]);
            const T f2 = f(c + h * kGK15X[i]);
            resk += kGK15WK[i] * (f1 + f2);
            if (i % 2 == 1) resg += kGK15WG[i / 2] * (f1 + f2);
        } else {
            const T fc = f(c);
            resk += kGK15WK[7] * fc;
            resg += kGK15WG[3] * fc;
        }
    }
    value = resk * h;
    err = magnitude((resk - resg) * h);
    if (!std::isfinite(magnitude(value)))
        throw NonFiniteIntegrand("integrand produced a non-finite value");
}

struct Seg {
    double err;
    long idx;  // payload index; doubles as deterministic tie-break
    bool operator<(const Seg& o) const {
        if (err != o.err) return err < o.err;  // worst error first
        return idx > o.idx;                    // older segment first on ties
    }
};

}  // namespace detail

// Adaptive GK15 on [a,b] with worst-first refinement; deterministic.
// Initial breakpoints may be supplied for known oscillation structure.
template <typename T, typename F>
QuadratureResult<T> adaptive_gk(const F& f, double a, double b,
                                const ToleranceSpec& tol,
                                const std::vector<double>& breakpoints = {}) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double p : breakpoints)
        if (p > a && p < b) pts.push_back(p);
    pts.push_back(b);

    struct Node { double a, b, err; T val; bool alive; };
    std::vector<Node> nodes;
    std::priority_queue<detail::Seg> heap;
    T total{};
    double toterr = 0.0;
    long evals = 0;

    auto push_seg = [&](double x0, double x1) {
        T v;
        double e;
        detail::gk15(f, x0, x1, v, e);
        evals += 15;
        heap.push({e, (long)nodes.size()});
        nodes.push_back({x0, x1, e, v, true});
        total += v;
        toterr += e;
    };
    for (size_t i = 0; i + 1 < pts.size(); ++i) push_seg(pts[i], pts[i + 1]);

    auto target = [&] {
        return std::max(tol.abs_tol, tol.rel_tol * detail::magnitude(total));
    };
    while (toterr > target() && evals + 30 <= tol.max_evals && !heap.empty()) {
        const detail::Seg s = heap.top();
        heap.pop();
        Node& n = nodes[s.idx];
        const double mid = 0.5 * (n.a + n.b);
        if (mid <= n.a || mid >= n.b) break;  // interval at machine resolution
        n.alive = false;
        total -= n.val;
        toterr -= n.err;
        const double a0 = n.a, b0 = n.b;
        push_seg(a0, mid);
        push_seg(mid, b0);
    }
    return {total, toterr, evals, toterr <= target()};
}

// 1-D adaptive quadrature; b may be +infinity (algebraic map s = a + t/(1-t)).
QuadratureResult<double> integrate_1d(const std::function<double(double)>& f,
                                      double a, double b, const ToleranceSpec& tol,
                                      const std::vector<double>& breakpoints = {});
QuadratureResult<complexd> integrate_1d_c(const std::function<complexd(double)>& f,
                                          double a, double b, const ToleranceSpec& tol,
                                          const std::vector<double>& breakpoints = {});

// PV int_a^b f(s)/(s-pole) ds via symmetric subtraction:
//   int [f(s)-f(pole)]/(s-pole) ds + f(pole) ln|(b-pole)/(pole-a)|.
// b may be +infinity (handled by a symmetric PV window plus a plain tail).
QuadratureResult<double> integrate_pv(const std::function<double(double)>& f,
                                      double pole, double a, double b,
                                      const ToleranceSpec& tol);

// int_0^pi dtheta sin(theta) int_0^2pi dphi g(theta, phi): Gauss-Legendre in
// cos(theta), uniform trapezoid in phi, doubled until converged.
QuadratureResult<complexd> integrate_sphere(
    const std::function<complexd(double, double)>& g, const ToleranceSpec& tol);

// Integral of g over the resonance surface s = s_star of s = gamma|k|(1 - v cos
// theta), with the change-of-variables Jacobian s*^2/(gamma(1 - v cos theta))^3:
//   int dOmega g(theta, phi) s*^2 / (gamma (1 - v cos theta))^3.
// The caller supplies the pi * sign convention. Throws NonPositiveShell for
// s_star <= 0 (unreachable resonance).
QuadratureResult<complexd> onshell_surface_integral(
    const std::function<complexd(double, double)>& g, double s_star, double v,
    const ToleranceSpec& tol);

// Gauss-Legendre nodes/weights on [-1,1]; cached, thread-safe.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

}  // namespace udw::quad

#endif
