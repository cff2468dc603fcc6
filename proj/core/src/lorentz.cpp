#include "udw/lorentz.hpp"

#include <cmath>

namespace udw::lorentz {

Mat4 Mat4::identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
    return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const double a = m[i][k];
            if (a == 0.0) continue;
            for (int j = 0; j < 4; ++j) r.m[i][j] += a * o.m[k][j];
        }
    return r;
}

std::array<double, 4> Mat4::column(int j) const {
    return {m[0][j], m[1][j], m[2][j], m[3][j]};
}

const GeneratorSet& generators() {
    static const GeneratorSet gs = [] {
        GeneratorSet g{};
        for (int j = 0; j < 3; ++j) {
            g.K[j].m[0][j + 1] = 1.0;  // boost: symmetric, mixes time with axis j
            g.K[j].m[j + 1][0] = 1.0;
        }
        // rotations: (R_j)_ab = -eps_{jab} on the spatial block
        auto set_rot = [](Mat4& r, int a, int b) {
            r.m[a][b] = -1.0;
            r.m[b][a] = 1.0;
        };
        set_rot(g.J[0], 2, 3);  // about x: rotates y into z
        set_rot(g.J[1], 3, 1);  // about y
        set_rot(g.J[2], 1, 2);  // about z
        return g;
    }();
    return gs;
}

static Mat4 scale_add(const Mat4& a, double sa, const Mat4& b, double sb) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = sa * a.m[i][j] + sb * b.m[i][j];
    return r;
}

// exp(A) by scaling-and-squaring with a machine-precision Taylor series on
// the scaled matrix (||A/2^s|| <= 0.25).
static Mat4 expm(const Mat4& a) {
    double norm = 0.0;
    for (int i = 0; i < 4; ++i) {
        double row = 0.0;
        for (int j = 0; j < 4; ++j) row += std::abs(a.m[i][j]);
        norm = std::max(norm, row);
    }
    if (!std::isfinite(norm)) throw Error("non-finite generator argument");
    int s = 0;
    while (norm > 0.25) {
        norm *= 0.5;
        ++s;
    }
    Mat4 x = a;
    const double scale = std::ldexp(1.0, -s);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) x.m[i][j] *= scale;

    Mat4 result = Mat4::identity();
    Mat4 term = Mat4::identity();
    for (int n = 1; n <= 24; ++n) {
        term = term * x;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) term.m[i][j] /= n;
        result = scale_add(result, 1.0, term, 1.0);
    }
    for (int i = 0; i < s; ++i) result = result * result;
    return result;
}

Mat4 boost_matrix(const Vec3& v) {
    const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (!(v2 < 1.0)) throw FasterThanLight("|v| must be < c");
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    Mat4 r = Mat4::identity();
    r.m[0][0] = gamma;
    for (int i = 0; i < 3; ++i) {
        r.m[0][i + 1] = gamma * v[i];
        r.m[i + 1][0] = gamma * v[i];
        for (int j = 0; j < 3; ++j)
            r.m[i + 1][j + 1] = (i == j ? 1.0 : 0.0) +
                                (v2 > 0 ? (gamma - 1.0) * v[i] * v[j] / v2 : 0.0);
    }
    return r;
}

Mat4 instantaneous_lorentz(const Vec3& zeta, const Vec3& theta) {
    const GeneratorSet& g = generators();
    Mat4 a{};
    for (int j = 0; j < 3; ++j) {
        a = scale_add(a, 1.0, g.K[j], zeta[j]);
        a = scale_add(a, 1.0, g.J[j], theta[j]);
    }
    return expm(a);
}

FourVector tilde_momentum(const Vec3& k, double v) {
    const double kn = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    if (!(kn > 0.0)) throw ZeroMomentum("|k| must be > 0");
    const double gamma = lorentz_gamma(v);
    FourVector kt;
    kt[0] = -gamma * (kn - v * k[0]);
    kt[1] = gamma * (k[0] - v * kn);
    kt[2] = k[1];
    kt[3] = k[2];
    return kt;
}

Mat4 trajectory_frame(const TrajectorySpec& traj, double tau) {
    if (const Inertial* in = std::get_if<Inertial>(&traj)) return boost_matrix(in->v);
    const General& gen = std::get<General>(traj);
    return instantaneous_lorentz(gen.zeta_of_t(tau), gen.theta_of_t(tau));
}

// Adaptive RK45 (Cash-Karp) for dx^mu/dtau = Lambda^mu_0(tau).
static std::array<double, 4> integrate_column0(const General& gen, double tau) {
    auto deriv = [&](double t) {
        return instantaneous_lorentz(gen.zeta_of_t(t), gen.theta_of_t(t)).column(0);
    };
    const double a = gen.tau0, b = tau;
    if (b < a) throw IntegrationFailure("tau < tau0 for a General trajectory");
    std::array<double, 4> x{0.0, 0.0, 0.0, 0.0};
    if (b == a) return x;

    // Cash-Karp nodes/weights. The right side is x-independent (a pure
    // quadrature), so only the nodes and the two weight rows are needed.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 3.0 / 5, c5 = 1.0, c6 = 7.0 / 8;
    static const double w1 = 37.0 / 378, w3 = 250.0 / 621, w4 = 125.0 / 594, w6 = 512.0 / 1771;
    static const double e1 = w1 - 2825.0 / 27648, e3 = w3 - 18575.0 / 48384,
                        e4 = w4 - 13525.0 / 55296, e5 = -277.0 / 14336, e6 = w6 - 0.25;

    double t = a;
    double h = (b - a) / 64.0;
    const double tol = 1e-12;
    long steps = 0;
    while (t < b) {
        if (++steps > 2000000) throw IntegrationFailure("worldline step limit exceeded");
        if (t + h > b) h = b - t;
        auto k1 = deriv(t);
        auto k2 = deriv(t + c2 * h);
        auto k3 = deriv(t + c3 * h);
        auto k4 = deriv(t + c4 * h);
        auto k5 = deriv(t + c5 * h);
        auto k6 = deriv(t + c6 * h);
        double err = 0.0;
        std::array<double, 4> dx{};
        for (int i = 0; i < 4; ++i) {
            dx[i] = h * (w1 * k1[i] + w3 * k3[i] + w4 * k4[i] + w6 * k6[i]);
            const double ei =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i]);
            err = std::max(err, std::abs(ei));
        }
        const double scale = tol * std::max(1.0, std::abs(h));
        if (err > scale && h > 1e-12 * (b - a)) {
            h *= std::max(0.1, 0.9 * std::pow(scale / err, 0.2));
            continue;
        }
        for (int i = 0; i < 4; ++i) x[i] += dx[i];
        t += h;
        if (err > 0.0) h *= std::min(5.0, 0.9 * std::pow(scale / err, 0.2));
    }
    return x;
}

FourVector worldline(const TrajectorySpec& traj, double tau) {
    FourVector x;
    if (const Inertial* in = std::get_if<Inertial>(&traj)) {
        const double v2 = in->v[0] * in->v[0] + in->v[1] * in->v[1] + in->v[2] * in->v[2];
        if (!(v2 < 1.0)) throw FasterThanLight("|v| must be < c");
        const double gamma = 1.0 / std::sqrt(1.0 - v2);
        x[0] = gamma * tau;
        for (int i = 0; i < 3; ++i) x[i + 1] = gamma * in->v[i] * tau;
        return x;
    }
    const General& gen = std::get<General>(traj);
    auto xi = integrate_column0(gen, tau);
    for (int i = 0; i < 4; ++i) x[i] = xi[i];
    return x;
}

FourVector comoving_to_lab(const TrajectorySpec& traj, double tau, const Vec3& xi) {
    FourVector x = worldline(traj, tau);
    const Mat4 lam = trajectory_frame(traj, tau);
    for (int mu = 0; mu < 4; ++mu)
        for (int j = 0; j < 3; ++j) x[mu] += lam.m[mu][j + 1] * xi[j];
    return x;
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

}  // namespace udw::lorentz
