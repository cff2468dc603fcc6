#include "udw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

namespace udw::quad {

namespace {

// Map [a, inf) to t in [0,1): s = a + t/(1-t), ds = dt/(1-t)^2.
template <typename T, typename F>
QuadratureResult<T> semi_infinite(const F& f, double a, const ToleranceSpec& tol,
                                  const std::vector<double>& breakpoints) {
    auto g = [&](double t) -> T {
        const double om = 1.0 - t;
        const double s = a + t / om;
        return f(s) / (om * om);
    };
    std::vector<double> bp;
    for (double p : breakpoints)
        if (p > a) bp.push_back((p - a) / (1.0 + p - a));
    // keep the far tail resolved: the map compresses it near t = 1
    bp.push_back(0.5);
    bp.push_back(0.9);
    bp.push_back(0.99);
    std::sort(bp.begin(), bp.end());
    const double tmax = 1.0 - 1e-14;
    return adaptive_gk<T>(g, 0.0, tmax, tol, bp);
}

}  // namespace

QuadratureResult<double> integrate_1d(const std::function<double(double)>& f,
                                      double a, double b, const ToleranceSpec& tol,
                                      const std::vector<double>& breakpoints) {
    if (std::isinf(b)) return semi_infinite<double>(f, a, tol, breakpoints);
    return adaptive_gk<double>(f, a, b, tol, breakpoints);
}

QuadratureResult<complexd> integrate_1d_c(const std::function<complexd(double)>& f,
                                          double a, double b, const ToleranceSpec& tol,
                                          const std::vector<double>& breakpoints) {
    if (std::isinf(b)) return semi_infinite<complexd>(f, a, tol, breakpoints);
    return adaptive_gk<complexd>(f, a, b, tol, breakpoints);
}

QuadratureResult<double> integrate_pv(const std::function<double(double)>& f,
                                      double pole, double a, double b,
                                      const ToleranceSpec& tol) {
    if (!(a < pole) || !(pole < b))
        throw PoleOutsideDomain("PV pole must satisfy a < pole < b");

    // If b is infinite, take a symmetric PV window about the pole (its log
    // term vanishes) and add the pole-free tail with the kernel in place.
    if (std::isinf(b)) {
        const double cut = 2.0 * pole - a;
        QuadratureResult<double> head = integrate_pv(f, pole, a, cut, tol);
        QuadratureResult<double> tail = integrate_1d(
            [&](double s) { return f(s) / (s - pole); }, cut,
            std::numeric_limits<double>::infinity(), tol);
        return {head.value + tail.value, head.error_estimate + tail.error_estimate,
                head.evaluations + tail.evaluations, head.converged && tail.converged};
    }

    const double fp = f(pole);
    const double scale = std::max(b - pole, pole - a);
    const double hd = 1e-5 * scale;
    const double fprime = (f(pole + hd) - f(pole - hd)) / (2.0 * hd);
    const double guard = 1e-7 * scale;

    auto g = [&](double s) {
        const double ds = s - pole;
        if (std::abs(ds) <= guard) return fprime;  // removable point
        return (f(s) - fp) / ds;
    };
    QuadratureResult<double> r =
        adaptive_gk<double>(g, a, b, tol, {pole - guard, pole, pole + guard});
    r.value += fp * std::log((b - pole) / (pole - a));
    r.evaluations += 3;
    return r;
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> x(n), w(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

QuadratureResult<complexd> integrate_sphere(
    const std::function<complexd(double, double)>& g, const ToleranceSpec& tol) {
    complexd prev{};
    double err = std::numeric_limits<double>::infinity();
    long evals = 0;
    complexd value{};
    bool have_prev = false;

    for (int n = 8; n <= 512; n *= 2) {
        const auto& [xu, wu] = gauss_legendre(n);
        const int m = std::max(8, n / 2);  // trapezoid is spectrally accurate in phi
        complexd sum{};
        for (int i = 0; i < n; ++i) {
            const double theta = std::acos(xu[i]);
            complexd ring{};
            for (int j = 0; j < m; ++j) {
                const double phi = 2.0 * std::numbers::pi * j / m;
                ring += g(theta, phi);
            }
            sum += wu[i] * ring * (2.0 * std::numbers::pi / m);
            evals += m;
        }
        value = sum;
        if (have_prev) {
            err = std::abs(value - prev);
            const double target =
                std::max(tol.abs_tol, tol.rel_tol * std::abs(value));
            if (err <= target) return {value, err, evals, true};
        }
        prev = value;
        have_prev = true;
        if (evals > tol.max_evals) break;
    }
    return {value, err, evals, false};
}

QuadratureResult<complexd> onshell_surface_integral(
    const std::function<complexd(double, double)>& g, double s_star, double v,
    const ToleranceSpec& tol) {
    if (!(s_star > 0.0))
        throw NonPositiveShell("resonance surface requires s_star > 0");
    const double gamma = lorentz_gamma(v);
    auto h = [&](double theta, double phi) -> complexd {
        const double denom = gamma * (1.0 - v * std::cos(theta));
        return g(theta, phi) / (denom * denom * denom);
    };
    QuadratureResult<complexd> r = integrate_sphere(h, tol);
    r.value *= s_star * s_star;
    r.error_estimate *= s_star * s_star;
    return r;
}

}  // namespace udw::quad
