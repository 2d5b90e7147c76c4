#include "trefoil/quadric.hpp"

namespace trefoil {

bool quadric_check(const QuadricPoint &p, double tol) {
    require_curvature_param(p.S);
    return quadric_residual(p) <= tol;
}

bool quadric_check(const QuadricPoint &p) { return quadric_check(p, geom_tol()); }

Mat2 embed(const QuadricPoint &p) {
    require_curvature_param(p.S);
    const cplx rs = sqrt_S(p.S);
    return {cplx{p.t, -p.S * p.z}, rs * cplx{p.x, p.y},
            rs * cplx{p.x, -p.y}, cplx{p.t, p.S * p.z}};
}

QuadricPoint extract(const Mat2 &q, double S) {
    require_curvature_param(S);
    const cplx rs = sqrt_S(S);
    // t and z from the diagonal, x and y from the upper-right entry.
    const cplx t_c = (q.a + q.d) * 0.5;
    const cplx z_c = (q.d - q.a) / (2.0 * cplx{0.0, S});
    const cplx w_c = q.b / rs;
    const cplx conj_c = q.c / rs;  // should equal conj(w_c)
    const double tol = 1e-7 * std::max(1.0, max_abs(q));
    if (std::abs(t_c.imag()) > tol || std::abs(z_c.imag()) > tol ||
        std::abs(conj_c - std::conj(w_c)) > tol)
        throw GeomError(errc::out_of_domain, "matrix is not of quadric form for this S");
    return {w_c.real(), w_c.imag(), z_c.real(), t_c.real(), S};
}

Mat4 left_linear(const QuadricPoint &q) {
    require_curvature_param(q.S);
    const double a = q.x, b = q.y, c = q.z, d = q.t, S = q.S;
    Mat4 r;
    r.m = {{{d, S * c, -S * b, a},
            {-S * c, d, S * a, b},
            {-b, a, d, c},
            {S * a, S * b, -S * S * c, d}}};
    return r;
}

Mat4 right_linear(double theta, double S) {
    require_curvature_param(S);
    const double ct = std::cos(theta), st = std::sin(theta);
    Mat4 r;
    r.m = {{{ct, -st, 0.0, 0.0},
            {st, ct, 0.0, 0.0},
            {0.0, 0.0, ct, st / S},
            {0.0, 0.0, -S * st, ct}}};
    return r;
}

LRIsometry lr_compose(const LRIsometry &g1, const LRIsometry &g2) {
    if (g1.S != g2.S)
        throw GeomError(errc::out_of_domain, "isometries of different model spaces");
    // Apply g1 first: x -> L2 (L1 x R1) R2, so the pair is (L2 L1, R1 R2).
    return {g2.left * g1.left, g1.right * g2.right, g1.S};
}

LRIsometry lr_inverse(const LRIsometry &g) {
    return {g.left.inverse(), g.right.inverse(), g.S};
}

LRIsometry lr_power(const LRIsometry &g, int n) {
    if (n < 0) return lr_power(lr_inverse(g), -n);
    LRIsometry acc = lr_identity(g.S);
    for (int i = 0; i < n; ++i) acc = lr_compose(acc, g);
    return acc;
}

QuadricPoint lr_apply(const LRIsometry &g, const QuadricPoint &p) {
    if (g.S != p.S)
        throw GeomError(errc::out_of_domain, "isometry and point live on different quadrics");
    return extract(g.left * embed(p) * g.right, p.S);
}

Mat4 lr_to_linear(const LRIsometry &g) {
    return left_linear(extract(g.left, g.S)) * right_linear(right_phase(g.right), g.S);
}

double lr_agreement_residual(const LRIsometry &g, const QuadricPoint &p) {
    const QuadricPoint via_pair = lr_apply(g, p);
    const Vec4 via_linear = lr_to_linear(g).apply(p.vec());
    return max_abs(via_pair.vec() - via_linear);
}

DiskPoint project_p(const QuadricPoint &p) {
    require_curvature_param(p.S);
    const cplx num{p.x, p.y};
    const cplx den{p.t, p.S * p.z};
    // t + iSz = 0 happens only on the antipodal fiber of the S < 0 sphere.
    if (std::abs(den) == 0.0) return {cplx{0.0, 0.0}, true};
    return {num / den, false};
}

// Coefficients of the homography induced on w by the left factor:
// h(w) = (A w + B) / (C w + D).
namespace {
struct HomographyCoeffs {
    cplx A, B, C, D;
};

HomographyCoeffs homography_coeffs(const LRIsometry &g) {
    const QuadricPoint q = extract(g.left, g.S);
    const cplx A{q.t, -g.S * q.z};
    const cplx B{q.x, q.y};
    const cplx C = g.S * cplx{q.x, -q.y};
    const cplx D{q.t, g.S * q.z};
    return {A, B, C, D};
}
}  // namespace

DiskPoint homography_of(const LRIsometry &g, const DiskPoint &w) {
    const auto [A, B, C, D] = homography_coeffs(g);
    if (w.infinite) {
        if (std::abs(C) == 0.0) return {cplx{0.0, 0.0}, true};
        return {A / C, false};
    }
    const cplx den = C * w.w + D;
    if (std::abs(den) == 0.0) return {cplx{0.0, 0.0}, true};
    return {(A * w.w + B) / den, false};
}

cplx homography_derivative(const LRIsometry &g, cplx w) {
    const auto [A, B, C, D] = homography_coeffs(g);
    const cplx den = C * w + D;
    if (std::abs(den) == 0.0)
        throw GeomError(errc::out_of_domain, "derivative requested at a pole of the homography");
    return (A * D - B * C) / (den * den);
}

}  // namespace trefoil
