#include "trefoil/metric.hpp"

#include <algorithm>
#include <cmath>

#include "trefoil/numformat.hpp"

namespace trefoil {

double det3(const SymMat3 &q) {
    const auto &m = q.m;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<double, 3> sym_eigenvalues(const SymMat3 &a) {
    const auto &m = a.m;
    const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if (p1 == 0.0) {
        std::array<double, 3> e{m[0][0], m[1][1], m[2][2]};
        std::sort(e.begin(), e.end());
        return e;
    }
    const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                      (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    SymMat3 b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b.m[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
    double r = det3(b) / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * PI / 3.0);
    return {e3, 3.0 * q - e1 - e3, e1};
}

SymMat3 metric_Q(double mu, double nu, double S) {
    require_curvature_param(S);
    const double D = 1.0 - S * (mu * mu + nu * nu);
    if (D <= 0.0)
        throw GeomError(errc::out_of_domain, "metric requested outside the chart disk");
    const double D2 = D * D;
    SymMat3 q;
    q.m[0][0] = (nu * nu + 1.0) / D2;
    q.m[0][1] = q.m[1][0] = -mu * nu / D2;
    q.m[0][2] = q.m[2][0] = nu / (S * D);
    q.m[1][1] = (mu * mu + 1.0) / D2;
    q.m[1][2] = q.m[2][1] = -mu / (S * D);
    q.m[2][2] = 1.0 / (S * S);
    return q;
}

SymMat3 metric_Q_normalized(double mu, double nu, int sign) {
    if (sign != 1 && sign != -1)
        throw GeomError(errc::out_of_range, "sign must be +1 or -1");
    // Explicit constant-curvature forms; must coincide with metric_Q(.,.,+-1).
    const double D = 1.0 - sign * (mu * mu + nu * nu);
    if (D <= 0.0)
        throw GeomError(errc::out_of_domain, "metric requested outside the chart disk");
    const double D2 = D * D;
    SymMat3 q;
    q.m[0][0] = (nu * nu + 1.0) / D2;
    q.m[0][1] = q.m[1][0] = -mu * nu / D2;
    q.m[1][1] = (mu * mu + 1.0) / D2;
    q.m[2][2] = 1.0;
    if (sign == 1) {
        q.m[0][2] = q.m[2][0] = nu / D;
        q.m[1][2] = q.m[2][1] = -mu / D;
    } else {
        q.m[0][2] = q.m[2][0] = -nu / D;
        q.m[1][2] = q.m[2][1] = mu / D;
    }
    return q;
}

std::array<double, 3> klein_projection(double mu, double nu, double S) {
    require_curvature_param(S);
    const double D = 1.0 - S * (mu * mu + nu * nu);
    if (D <= 0.0)
        throw GeomError(errc::out_of_domain, "Klein image undefined outside the chart disk");
    const double f = 1.0 / std::sqrt(D);
    return {mu * f, nu * f, f / std::sqrt(std::abs(S))};
}

double klein_constraint_residual(double mu, double nu, double S) {
    const auto x = klein_projection(mu, nu, S);
    if (S > 0.0) return std::abs(-x[0] * x[0] - x[1] * x[1] + x[2] * x[2] - 1.0 / S);
    return std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - 1.0 / std::abs(S));
}

std::array<std::array<double, 2>, 2> klein_pullback(double mu, double nu, double S, double h) {
    // Central-difference Jacobian of klein_projection, contracted with the
    // ambient form: diag(1, 1, -1) for S > 0, euclidean for S < 0.
    std::array<std::array<double, 3>, 2> jac{};
    const double pt[2] = {mu, nu};
    for (int j = 0; j < 2; ++j) {
        double plus[2] = {pt[0], pt[1]}, minus[2] = {pt[0], pt[1]};
        plus[j] += h;
        minus[j] -= h;
        const auto xp = klein_projection(plus[0], plus[1], S);
        const auto xm = klein_projection(minus[0], minus[1], S);
        for (int k = 0; k < 3; ++k) jac[j][k] = (xp[k] - xm[k]) / (2.0 * h);
    }
    const double sgn3 = S > 0.0 ? -1.0 : 1.0;
    std::array<std::array<double, 2>, 2> g{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            g[i][j] = jac[i][0] * jac[j][0] + jac[i][1] * jac[j][1] + sgn3 * jac[i][2] * jac[j][2];
    return g;
}

namespace {

SeifertCoords image_coords(const LRIsometry &g, const SeifertCoords &c) {
    const Mat2 X = section_sigma(cplx{c.mu, c.nu}, g.S) * fiber_rho(c.zeta);
    return to_seifert(extract(g.left * X * g.right, g.S));
}

}  // namespace

PullbackReport isometry_pullback_test(const LRIsometry &g, int samples, std::uint64_t seed,
                                      double fd_step) {
    require_curvature_param(g.S);
    PullbackReport rep;
    rep.fd_step = fd_step;
    UniformSampler rng(seed);
    const double radius = 0.8 / std::sqrt(std::abs(g.S));
    const double h = fd_step;

    int attempts = 0;
    const int max_attempts = samples * 8;
    while (rep.sample_count < samples && attempts < max_attempts) {
        ++attempts;
        const double mu = rng.next(-radius, radius);
        const double nu = rng.next(-radius, radius);
        const double zeta = rng.next(-PI + 0.1, PI - 0.1);
        if (mu * mu + nu * nu > radius * radius) continue;  // uniform on the disk

        try {
            const SeifertCoords c{mu, nu, zeta};
            const SeifertCoords img = image_coords(g, c);
            const double img_r2 = img.mu * img.mu + img.nu * img.nu;
            if (g.S > 0.0 && img_r2 > 0.95 / g.S) {
                ++rep.skipped;  // image too close to the chart boundary for stable differences
                continue;
            }
            if (g.S < 0.0 && img_r2 > 100.0 / std::abs(g.S)) {
                ++rep.skipped;  // too close to the antipodal fiber for stable differences
                continue;
            }

            // 3x3 Jacobian of the coordinate map by central differences;
            // the fiber component of a difference is wrapped to (-pi, pi].
            double J[3][3];
            for (int j = 0; j < 3; ++j) {
                SeifertCoords plus = c, minus = c;
                (j == 0 ? plus.mu : j == 1 ? plus.nu : plus.zeta) += h;
                (j == 0 ? minus.mu : j == 1 ? minus.nu : minus.zeta) -= h;
                const SeifertCoords ip = image_coords(g, plus);
                const SeifertCoords im = image_coords(g, minus);
                double d[3] = {ip.mu - im.mu, ip.nu - im.nu, ip.zeta - im.zeta};
                d[2] -= 2.0 * PI * std::round(d[2] / (2.0 * PI));
                for (int i = 0; i < 3; ++i) J[i][j] = d[i] / (2.0 * h);
            }

            const SymMat3 Qsrc = metric_Q(mu, nu, g.S);
            const SymMat3 Qimg = metric_Q(img.mu, img.nu, g.S);
            double res = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    double s = 0.0;
                    for (int k = 0; k < 3; ++k)
                        for (int l = 0; l < 3; ++l) s += J[k][i] * Qimg.m[k][l] * J[l][j];
                    res = std::max(res, std::abs(s - Qsrc.m[i][j]));
                }
            rep.max_residual = std::max(rep.max_residual, res);
            ++rep.sample_count;
        } catch (const GeomError &) {
            ++rep.skipped;
        }
    }
    return rep;
}

}  // namespace trefoil
