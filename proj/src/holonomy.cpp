#include "trefoil/holonomy.hpp"

#include <cmath>

#include "trefoil/seifert_chart.hpp"
#include "trefoil/surface.hpp"

namespace trefoil {

LRIsometry rotation_R(double alpha, double theta, double S) {
    require_curvature_param(S);
    return {Mat2::diagonal(std::polar(1.0, alpha), std::polar(1.0, -alpha)),
            Mat2::diagonal(std::polar(1.0, -theta), std::polar(1.0, theta)), S};
}

LRIsometry translation_t(int sign, double S) {
    require_curvature_param(S);
    if (sign != 1 && sign != -1)
        throw GeomError(errc::out_of_range, "translation sign must be +1 or -1");
    if (std::abs(1.0 - S) < 1e-12)
        throw GeomError(errc::degenerate,
                        "translations to w = +-1 degenerate at S = 1 (alpha = 0)");
    const double f = 1.0 / std::sqrt(std::abs(1.0 - S));
    const cplx off = sqrt_S(S) * static_cast<double>(sign) * f;
    return {Mat2{cplx{f, 0.0}, off, off, cplx{f, 0.0}}, Mat2::identity(), S};
}

Mat2 closed_form_M(double alpha) {
    const double c = std::cos(alpha);
    // s = sqrt(2 cos 2alpha - 1): real for alpha < pi/6, imaginary beyond.
    const cplx s = std::sqrt(cplx{2.0 * std::cos(2.0 * alpha) - 1.0, 0.0});
    const cplx i{0.0, 1.0};
    return Mat2{cplx{c, 0.5}, -0.5 * i * s, 0.5 * i * s, cplx{c, -0.5}};
}

Mat2 closed_form_N(double alpha) {
    Mat2 m = closed_form_M(alpha);
    m.b = -m.b;
    m.c = -m.c;
    return m;
}

HolonomyPair generators_ab(double alpha, double theta) {
    if (!(alpha >= 0.0) || !(alpha < 5.0 * PI / 6.0))
        throw GeomError(errc::out_of_range, "alpha must lie in [0, 5pi/6)");
    if (std::abs(1.0 - 2.0 * std::sin(alpha)) < 1e-6)
        throw GeomError(errc::degenerate,
                        "S(alpha) = 0 at the Nil wall alpha = pi/6; use nil_generators");
    const double S = s_of_alpha(alpha);
    const Mat2 right = Mat2::diagonal(std::polar(1.0, -theta), std::polar(1.0, theta));
    HolonomyPair g;
    g.alpha = alpha;
    g.theta = theta;
    g.S = S;
    g.a = {closed_form_M(alpha), right, S};
    g.b = {closed_form_N(alpha), right, S};
    return g;
}

double two_route_residual(double alpha, double theta) {
    if (!(alpha > 0.0))
        throw GeomError(errc::degenerate, "conjugation route needs alpha > 0 (S < 1)");
    const HolonomyPair g = generators_ab(alpha, theta);
    const LRIsometry R = rotation_R(alpha, theta, g.S);
    const LRIsometry t1 = translation_t(+1, g.S), tm1 = translation_t(-1, g.S);
    // Conjugation as words: t^{-1} first, then R, then t.
    const LRIsometry a2 = lr_compose(lr_compose(lr_inverse(t1), R), t1);
    const LRIsometry b2 = lr_compose(lr_compose(lr_inverse(tm1), R), tm1);
    return std::max(std::max(distance(a2.left, g.a.left), distance(a2.right, g.a.right)),
                    std::max(distance(b2.left, g.b.left), distance(b2.right, g.b.right)));
}

NilHolonomyPair nil_generators(double t) {
    if (!std::isfinite(t))
        throw GeomError(errc::out_of_range, "Nil parameter t must be finite");
    const double s3 = std::sqrt(3.0);
    const double col = -(s3 / 2.0) * (8.0 * t + 1.0);
    NilHolonomyPair g;
    g.t = t;
    g.a.m = {{{0.5, -s3 / 2.0, 0.0, 0.5},
              {s3 / 2.0, 0.5, 0.0, -s3 / 2.0},
              {s3 / 2.0, -0.5, 1.0, col},
              {0.0, 0.0, 0.0, 1.0}}};
    g.b.m = {{{0.5, -s3 / 2.0, 0.0, -0.5},
              {s3 / 2.0, 0.5, 0.0, s3 / 2.0},
              {-s3 / 2.0, 0.5, 1.0, col},
              {0.0, 0.0, 0.0, 1.0}}};
    return g;
}

double nil_relator_residual(const NilHolonomyPair &g) {
    return distance(g.a * g.b * g.a, g.b * g.a * g.b);
}

WordsCD words_cd(const HolonomyPair &g) {
    WordsCD w;
    // As function composites: c = b . a (apply a first), d = b . a . b.
    w.c = lr_compose(g.a, g.b);
    w.d = lr_compose(g.b, w.c);
    w.d2 = lr_compose(w.d, w.d);
    return w;
}

NilWordsCD nil_words_cd(const NilHolonomyPair &g) {
    NilWordsCD w;
    w.c = g.b * g.a;
    w.d = g.b * g.a * g.b;
    w.d2 = w.d * w.d;
    return w;
}

RelatorReport relator_check(const HolonomyPair &g) {
    RelatorReport rep;
    const LRIsometry aba = lr_compose(g.a, lr_compose(g.b, g.a));
    const LRIsometry bab = lr_compose(g.b, lr_compose(g.a, g.b));
    rep.lr_residual = std::max(distance(aba.left, bab.left), distance(aba.right, bab.right));
    rep.linear_residual =
        distance(lr_to_linear(aba), lr_to_linear(bab));
    rep.max_residual = std::max(rep.lr_residual, rep.linear_residual);
    return rep;
}

namespace {
// Circle distance between two phases.
double phase_distance(double a, double b) {
    double d = std::fmod(a - b, 2.0 * PI);
    if (d > PI) d -= 2.0 * PI;
    if (d < -PI) d += 2.0 * PI;
    return std::abs(d);
}
}  // namespace

DomainLevels domain_levels(const HolonomyPair &g) {
    const double height = 6.0 * g.theta - PI;
    if (std::abs(height) < 1e-12)
        throw GeomError(errc::degenerate, "slope undefined: fiber height 6 theta - pi vanishes");

    const WordsCD w = words_cd(g);
    // Vertex A of the fundamental domain: the zero-section point over w = +1,
    // in the chart only when S < 1.
    if (g.S >= 1.0 - 1e-12)
        throw GeomError(errc::degenerate, "vertex A is not in the chart at S = 1");
    const Mat2 A = section_sigma(cplx{1.0, 0.0}, g.S);

    const auto fiber_phase_at = [&](const LRIsometry &iso, cplx expected_w) {
        const Mat2 img = iso.left * A * iso.right;
        const QuadricPoint qp = extract(img, g.S);
        const DiskPoint base = project_p(qp);
        if (base.infinite || std::abs(base.w - expected_w) > 1e-6)
            throw GeomError(errc::out_of_domain, "image lands over an unexpected base point");
        // Remove the section at the landing point; the remainder is rho(zeta).
        const Mat2 rest = section_sigma(expected_w, g.S).inverse() * img;
        return std::arg(rest.d);
    };

    DomainLevels lv;
    lv.height = height;
    lv.slope = (g.alpha + 5.0 * g.theta - PI) / height;
    lv.level_dA = fiber_phase_at(w.d, cplx{-1.0, 0.0});
    lv.level_cdA = fiber_phase_at(lr_compose(w.d, w.c), cplx{1.0, 0.0});
    lv.residual_dA = phase_distance(lv.level_dA, 3.0 * g.theta - PI / 2.0);
    lv.residual_cdA = phase_distance(lv.level_cdA, 5.0 * g.theta + g.alpha - PI);
    return lv;
}

std::array<Mat4, 2> generators_linear_blocks(double alpha, double theta) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double ct = std::cos(theta), st = std::sin(theta);
    const double u = 1.0 - 2.0 * sa, v = 1.0 + 2.0 * sa;
    // 2x2 blocks of 2 * lm(a); lm(b) flips the signs of A12 and A21.
    const double A11[2][2] = {{2.0 * ca * ct - st, -2.0 * ca * st - ct},
                              {2.0 * ca * st + ct, 2.0 * ca * ct - st}};
    const double A12[2][2] = {{u * ct, v * st}, {u * st, -v * ct}};
    const double A21[2][2] = {{v * ct, -v * st}, {-u * st, -u * ct}};
    const double A22[2][2] = {{2.0 * ca * ct + st, v * (2.0 * ca * st - ct) / u},
                              {u * (-2.0 * ca * st + ct) / v, 2.0 * ca * ct + st}};
    Mat4 a, b;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a.m[i][j] = 0.5 * A11[i][j];
            a.m[i][j + 2] = 0.5 * A12[i][j];
            a.m[i + 2][j] = 0.5 * A21[i][j];
            a.m[i + 2][j + 2] = 0.5 * A22[i][j];
            b.m[i][j] = 0.5 * A11[i][j];
            b.m[i][j + 2] = -0.5 * A12[i][j];
            b.m[i + 2][j] = -0.5 * A21[i][j];
            b.m[i + 2][j + 2] = 0.5 * A22[i][j];
        }
    return {a, b};
}

}  // namespace trefoil
