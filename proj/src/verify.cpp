#include "trefoil/verify.hpp"

#include <cmath>

#include "trefoil/holonomy.hpp"
#include "trefoil/metric.hpp"
#include "trefoil/numformat.hpp"
#include "trefoil/seifert_chart.hpp"
#include "trefoil/surface.hpp"

namespace trefoil {

namespace {

constexpr double kCurvatures[4] = {-1.0, -1.0 / 3.0, 0.5, 1.0};

SummaryCheck residual_check(const std::string &name, double residual, double tol,
                            const std::string &detail = "") {
    return {name, residual, tol, residual <= tol, detail};
}

// Random chart point at curvature S (safe radius, away from fiber seams).
SeifertCoords random_coords(UniformSampler &rng, double S) {
    const double rad = 0.8 / std::sqrt(std::abs(S));
    for (;;) {
        const double mu = rng.next(-rad, rad), nu = rng.next(-rad, rad);
        if (mu * mu + nu * nu > rad * rad) continue;
        return {mu, nu, rng.next(-PI + 0.1, PI - 0.1)};
    }
}

// Random alpha in [lo, 5pi/6 - margin] staying away from the Nil wall.
double random_alpha(UniformSampler &rng, double margin = 0.02) {
    for (;;) {
        const double a = rng.next(margin, 5.0 * PI / 6.0 - margin);
        if (std::abs(a - PI / 6.0) > 5e-3) return a;
    }
}

// Random word of length <= 6 in the generators a, b and their inverses.
LRIsometry random_word(UniformSampler &rng, const HolonomyPair &g, int max_len = 6) {
    const LRIsometry gens[4] = {g.a, g.b, lr_inverse(g.a), lr_inverse(g.b)};
    LRIsometry w = lr_identity(g.S);
    const int len = 1 + static_cast<int>(rng.next() * max_len);
    for (int i = 0; i < len; ++i)
        w = lr_compose(w, gens[static_cast<int>(rng.next() * 4.0) & 3]);
    return w;
}

std::vector<SummaryCheck> suite_algebra(std::uint64_t seed, int samples) {
    std::vector<SummaryCheck> out;
    UniformSampler rng(seed);
    const int n = std::max(8, samples / 4);

    double r_quadric = 0.0, r_roundtrip = 0.0;
    for (double S : kCurvatures)
        for (int i = 0; i < n; ++i) {
            const SeifertCoords c = random_coords(rng, S);
            const QuadricPoint p = from_seifert(c, S);
            r_quadric = std::max(r_quadric, quadric_residual(p));
            const QuadricPoint p2 = extract(embed(p), S);
            r_roundtrip = std::max(r_roundtrip, max_abs(p.vec() - p2.vec()));
        }
    out.push_back(residual_check("chart points satisfy the quadric equation", r_quadric, 1e-12));
    out.push_back(residual_check("embed/extract roundtrip", r_roundtrip, 1e-12));

    double r_agree = 0.0, r_comp = 0.0, r_inv = 0.0, r_equiv = 0.0, r_vert = 0.0, r_rot = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double alpha = random_alpha(rng);
        const double theta = rng.next(-PI, PI);
        const HolonomyPair hp = generators_ab(alpha, theta);
        const double S = hp.S;
        const LRIsometry g1 = random_word(rng, hp, 3);
        const LRIsometry g2 = random_word(rng, hp, 3);
        const QuadricPoint x = from_seifert(random_coords(rng, S), S);

        r_agree = std::max(r_agree, lr_agreement_residual(g1, x));

        const QuadricPoint via_pair = lr_apply(lr_compose(g1, g2), x);
        const QuadricPoint via_steps = lr_apply(g2, lr_apply(g1, x));
        r_comp = std::max(r_comp, max_abs(via_pair.vec() - via_steps.vec()));

        const QuadricPoint back = lr_apply(lr_compose(g1, lr_inverse(g1)), x);
        r_inv = std::max(r_inv, max_abs(back.vec() - x.vec()));

        // projection equivariance p(g x) = h_g(p(x))
        const DiskPoint w0 = project_p(x);
        const DiskPoint w1 = project_p(lr_apply(g1, x));
        const DiskPoint hw = homography_of(g1, w0);
        if (!w0.infinite && !w1.infinite && !hw.infinite && std::abs(w1.w) < 1e3)
            r_equiv = std::max(r_equiv, std::abs(w1.w - hw.w));

        // pure right factors do not move the base point
        const LRIsometry vert{Mat2::identity(),
                              Mat2::diagonal(std::polar(1.0, -theta), std::polar(1.0, theta)), S};
        const DiskPoint wv = project_p(lr_apply(vert, x));
        if (!wv.infinite) r_vert = std::max(r_vert, std::abs(wv.w - w0.w));

        // R(alpha, theta) fixes w = 0 and rotates the base by 2 alpha there
        const LRIsometry R = rotation_R(alpha, theta, S);
        const DiskPoint fix = homography_of(R, DiskPoint{cplx{0.0, 0.0}, false});
        r_rot = std::max(r_rot, std::abs(fix.w));
        r_rot = std::max(r_rot,
                         std::abs(homography_derivative(R, cplx{0.0, 0.0}) -
                                  std::polar(1.0, 2.0 * alpha)));
    }
    out.push_back(residual_check("pair action agrees with the 4x4 linear action", r_agree, 1e-9));
    out.push_back(residual_check("composition agrees with sequential application", r_comp, 1e-9));
    out.push_back(residual_check("g g^-1 acts as the identity", r_inv, 1e-9));
    out.push_back(
        residual_check("projection equivariance p(g x) = h_g(p(x))", r_equiv, 1e-9));
    out.push_back(residual_check("right factors act trivially on the base", r_vert, 1e-12));
    out.push_back(
        residual_check("rotation homography fixes 0 with multiplier e^{2 i alpha}", r_rot, 1e-12));
    return out;
}

std::vector<SummaryCheck> suite_surface(std::uint64_t seed, int samples) {
    std::vector<SummaryCheck> out;
    (void)seed;

    double r_chi = 0.0;
    for (int k = 2; k <= 60; ++k) {
        const double r = static_cast<double>(k);
        const double chi = chi_cone({0, {2.0, 3.0, r}});
        r_chi = std::max(r_chi, std::abs(chi - (-1.0 / 6.0 + 1.0 / r)));
    }
    r_chi = std::max(r_chi, std::abs(chi_cone({1, {}})));
    r_chi = std::max(r_chi, std::abs(chi_cone({0, {2.0, 3.0, INFINITY}}) + 1.0 / 6.0));
    out.push_back(residual_check("chi of the (2,3,r) base orbifolds", r_chi, 1e-12));

    {
        bool ok = base_geometry(6.0) == BaseGeometry::Euclidean &&
                  base_geometry(5.9) == BaseGeometry::Spherical &&
                  base_geometry(1.3) == BaseGeometry::Spherical &&
                  base_geometry(6.1) == BaseGeometry::Hyperbolic &&
                  base_geometry(INFINITY) == BaseGeometry::Hyperbolic;
        try {
            base_geometry(1.2);
            ok = false;
        } catch (const GeomError &) {
        }
        out.push_back(residual_check("geometry walls of the base orbifold", ok ? 0.0 : 1.0, 0.0));
    }

    double r_s = std::abs(s_of_alpha(0.0) - 1.0);
    r_s = std::max(r_s, std::abs(s_of_alpha(PI / 6.0)));
    r_s = std::max(r_s, std::abs(s_of_alpha(PI / 2.0) + 1.0 / 3.0));
    out.push_back(residual_check("curvature parameter landmarks S(0), S(pi/6), S(pi/2)", r_s, 1e-12));

    const int grid = std::max(50, samples);
    double r_two = 0.0, r_dual = 0.0, r_alt = 0.0, r_area = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double alpha = (5.0 * PI / 6.0) * (i + 0.5) / grid;
        if (std::abs(alpha - PI / 6.0) < 1e-3) continue;
        const TriangleSolution tri = solve_triangle(alpha);
        r_two = std::max(r_two, std::abs(tri.mu - alpha_to_model_distance(alpha)));
        // dual law of cosines for the (alpha, alpha, 2pi/3) triangle
        const double oracle =
            (std::cos(2.0 * PI / 3.0) + std::cos(alpha) * std::cos(alpha)) /
            (std::sin(alpha) * std::sin(alpha));
        const double lhs = tri.regime == TriangleRegime::Hyperbolic
                               ? std::cosh(2.0 * tri.mu)
                               : std::cos(2.0 * tri.mu);
        r_dual = std::max(r_dual, std::abs(lhs - oracle));
        // altitude law cos(lambda) sin(pi/3) = cos(alpha)
        const double clam = tri.regime == TriangleRegime::Hyperbolic
                                ? std::cosh(tri.lambda_side)
                                : std::cos(tri.lambda_side);
        r_alt = std::max(r_alt, std::abs(clam * std::sin(PI / 3.0) - std::cos(alpha)));
        r_area = std::max(r_area, std::abs(tri.area - std::abs(PI / 3.0 - 2.0 * alpha)));
    }
    out.push_back(
        residual_check("triangle half-base: trigonometric route vs curvature route", r_two, 1e-9));
    out.push_back(residual_check("dual law of cosines for the half-base", r_dual, 1e-9));
    out.push_back(residual_check("altitude law cos(lambda) sin(pi/3) = cos(alpha)", r_alt, 1e-9));
    out.push_back(residual_check("triangle areas by Gauss-Bonnet", r_area, 1e-12));
    return out;
}

std::vector<SummaryCheck> suite_metric(std::uint64_t seed, int samples) {
    std::vector<SummaryCheck> out;
    UniformSampler rng(seed);

    double r_norm = 0.0;
    for (int sign : {1, -1})
        for (int i = 0; i < 200; ++i) {
            const double rad = sign > 0 ? 0.95 : 2.0;
            const double mu = rng.next(-rad, rad), nu = rng.next(-rad, rad);
            if (sign > 0 && mu * mu + nu * nu >= 0.95) continue;
            const SymMat3 a = metric_Q(mu, nu, static_cast<double>(sign));
            const SymMat3 b = metric_Q_normalized(mu, nu, sign);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    r_norm = std::max(r_norm, std::abs(a.m[r][c] - b.m[r][c]));
        }
    out.push_back(
        residual_check("normalized constant-curvature forms match Q at S = +-1", r_norm, 1e-12));

    double neg_eig = 0.0;
    for (double S : kCurvatures)
        for (int i = 0; i < std::max(1000, samples); ++i) {
            const SeifertCoords c = random_coords(rng, S);
            const auto eig = sym_eigenvalues(metric_Q(c.mu, c.nu, S));
            neg_eig = std::max(neg_eig, -eig[0]);
        }
    out.push_back(residual_check("positive definiteness on the chart (eigenvalue oracle)",
                                 std::max(0.0, neg_eig), 0.0));

    double r_det = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mu = rng.next(-0.7, 0.7), nu = rng.next(-0.7, 0.7);
        const double rho2 = mu * mu + nu * nu;
        if (rho2 < 0.95) {
            const double d1 = det3(metric_Q(mu, nu, 1.0));
            const double expect1 = 1.0 / std::pow(1.0 - rho2, 4);
            r_det = std::max(r_det, std::abs(d1 - expect1) / expect1);
        }
        const double dm1 = det3(metric_Q(mu, nu, -1.0));
        const double expectm1 = 1.0 / std::pow(1.0 + rho2, 4);
        r_det = std::max(r_det, std::abs(dm1 - expectm1) / expectm1);
    }
    out.push_back(residual_check("determinant identities at S = +-1", r_det, 1e-9));

    double r_klein = 0.0;
    for (double S : kCurvatures)
        for (int i = 0; i < 200; ++i) {
            const SeifertCoords c = random_coords(rng, S);
            r_klein = std::max(r_klein, klein_constraint_residual(c.mu, c.nu, S));
        }
    out.push_back(residual_check("Klein image satisfies its quadric constraint", r_klein, 1e-12));

    double r_kp = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double mu = rng.next(-0.6, 0.6), nu = rng.next(-0.6, 0.6);
        const auto gp = klein_pullback(mu, nu, -1.0, 1e-5);
        const SymMat3 q = metric_Q(mu, nu, -1.0);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                r_kp = std::max(r_kp, std::abs(gp[r][c] - q.m[r][c]));
    }
    out.push_back(residual_check(
        "Klein pullback reproduces the horizontal metric block at S = -1", r_kp, 1e-5));

    // Isometry invariance of Q for every generator type, across the curvature family.
    // The closed forms M(alpha), N(alpha) lie on X_S for every S of the same
    // sign as 2 cos 2 alpha - 1, so each curvature gets a compatible alpha
    // (the natural inverse of S(alpha) where it exists; S = -1 is outside the
    // range, so any alpha > pi/6 serves there).
    double r_pull = 0.0;
    int total = 0, skipped = 0;
    for (double S : kCurvatures) {
        const double alpha = S == 1.0      ? 0.0
                             : S == 0.5    ? std::asin(1.0 / 6.0)
                             : S == -1.0   ? 2.0 * PI / 3.0
                                           : PI / 2.0;  // S = -1/3
        const Mat2 rho = Mat2::diagonal(std::polar(1.0, -0.41), std::polar(1.0, 0.41));
        std::vector<LRIsometry> gens;
        gens.push_back(rotation_R(0.7, 0.3, S));                            // R
        gens.push_back({embed(from_seifert({0.31, -0.22, 0.9}, S)), Mat2::identity(), S});  // l_q
        gens.push_back({Mat2::identity(), rho, S});                          // r_q'
        if (S < 1.0 - 1e-9) {
            gens.push_back(translation_t(+1, S));
            gens.push_back(translation_t(-1, S));
        }
        gens.push_back({closed_form_M(alpha), rho, S});                      // a
        gens.push_back({closed_form_N(alpha), rho, S});                      // b
        for (const LRIsometry &g : gens) {
            const PullbackReport rep =
                isometry_pullback_test(g, std::max(40, samples / 5), seed + total);
            r_pull = std::max(r_pull, rep.max_residual);
            total += rep.sample_count;
            skipped += rep.skipped;
        }
    }
    out.push_back(residual_check("generators pull the metric back to itself", r_pull, 1e-5,
                                 "samples=" + std::to_string(total) +
                                     " skipped=" + std::to_string(skipped)));
    return out;
}

std::vector<SummaryCheck> suite_holonomy(std::uint64_t seed, int samples) {
    std::vector<SummaryCheck> out;
    UniformSampler rng(seed);

    // Braid relation on a midpoint grid of (alpha, theta).
    const int grid = 50;
    double r_rel = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double alpha = (5.0 * PI / 6.0) * (i + 0.5) / grid;
        if (std::abs(1.0 - 2.0 * std::sin(alpha)) < 1e-3) continue;
        for (int j = 0; j < grid; ++j) {
            const double theta = 2.0 * PI * (j + 0.5) / grid;
            const RelatorReport rep = relator_check(generators_ab(alpha, theta));
            r_rel = std::max(r_rel, rep.max_residual);
        }
    }
    out.push_back(residual_check("braid relation a b a = b a b on the parameter grid", r_rel, 1e-9));

    {
        // Negative control: scrambled generators must violate the relation.
        double min_bad = INFINITY;
        for (int i = 0; i < 20; ++i) {
            HolonomyPair g = generators_ab(random_alpha(rng), rng.next(-PI, PI));
            // replace b's left part by an unrelated det-1 matrix
            Mat2 junk;
            do {
                junk = {cplx{rng.next(-1.0, 1.0), rng.next(-1.0, 1.0)},
                        cplx{rng.next(-1.0, 1.0), rng.next(-1.0, 1.0)},
                        cplx{rng.next(-1.0, 1.0), rng.next(-1.0, 1.0)},
                        cplx{rng.next(-1.0, 1.0), rng.next(-1.0, 1.0)}};
            } while (std::abs(junk.det()) < 0.3);
            g.b.left = junk * (1.0 / std::sqrt(junk.det()));
            const LRIsometry aba = lr_compose(g.a, lr_compose(g.b, g.a));
            const LRIsometry bab = lr_compose(g.b, lr_compose(g.a, g.b));
            min_bad = std::min(min_bad,
                               std::max(distance(aba.left, bab.left),
                                        distance(aba.right, bab.right)));
        }
        SummaryCheck c{"scrambled generators violate the relation (negative control)",
                       min_bad, 1e-3, min_bad > 1e-3, "residual must exceed the tolerance"};
        out.push_back(c);
    }

    double r_tor = 0.0, r_d2 = 0.0, r_levels = 0.0, r_blocks = 0.0;
    for (int i = 0; i < std::max(40, samples / 4); ++i) {
        const double alpha = random_alpha(rng);
        const double theta = rng.next(-PI, PI);
        const HolonomyPair g = generators_ab(alpha, theta);
        const Mat2 M = closed_form_M(alpha), N = closed_form_N(alpha);

        // torsion identities of the left parts
        const Mat2 NM = N * M;
        const Mat2 MNM = M * N * M;
        const Mat2 minus_id = -Mat2::identity();
        r_tor = std::max(r_tor, distance(pow(NM, 3), minus_id));
        r_tor = std::max(r_tor, distance(MNM * MNM, minus_id));
        r_tor = std::max(r_tor, distance(N * M * N, Mat2::diagonal(cplx{0.0, 1.0}, cplx{0.0, -1.0})));

        // d^2 = pure fiber translation by 6 theta - pi.  Pairs act projectively
        // ((L, R) and (-L, -R) are the same isometry), so normalize the sign.
        const WordsCD w = words_cd(g);
        Mat2 d2_left = w.d2.left, d2_right = w.d2.right;
        if (d2_left.trace().real() < 0.0) {
            d2_left = -d2_left;
            d2_right = -d2_right;
        }
        r_d2 = std::max(r_d2, distance(d2_left, Mat2::identity()));
        const double phase = right_phase(d2_right);
        const cplx want = std::polar(1.0, 6.0 * theta - PI);
        r_d2 = std::max(r_d2, std::abs(std::polar(1.0, phase) - want));

        // fundamental domain fiber levels
        if (std::abs(6.0 * theta - PI) > 1e-6 && g.S < 1.0 - 1e-9) {
            const DomainLevels lv = domain_levels(g);
            r_levels = std::max(r_levels, std::max(lv.residual_dA, lv.residual_cdA));
        }

        // blockwise display of the linear action
        const auto blocks = generators_linear_blocks(alpha, theta);
        r_blocks = std::max(r_blocks, distance(lr_to_linear(g.a), blocks[0]));
        r_blocks = std::max(r_blocks, distance(lr_to_linear(g.b), blocks[1]));
    }
    out.push_back(residual_check("torsion identities (NM)^3 = (MNM)^2 = -I, NMN = diag(i,-i)",
                                 r_tor, 1e-9));
    out.push_back(residual_check("d^2 is the fiber translation by 6 theta - pi", r_d2, 1e-9));
    out.push_back(residual_check("fundamental-domain fiber levels of d(A) and (c d)(A)",
                                 r_levels, 1e-9));
    out.push_back(residual_check("blockwise closed form of the 4x4 generators", r_blocks, 1e-9));

    double r_two = 0.0;
    for (int i = 0; i < 60; ++i)
        r_two = std::max(r_two, two_route_residual(random_alpha(rng, 0.05), rng.next(-PI, PI)));
    out.push_back(
        residual_check("closed forms equal the conjugated rotations", r_two, 1e-9));

    {
        double r_nil = 0.0;
        const double s3 = std::sqrt(3.0);
        for (double t : {-1.0, 0.0, 0.37, 5.0}) {
            const NilHolonomyPair g = nil_generators(t);
            r_nil = std::max(r_nil, nil_relator_residual(g));
            const NilWordsCD w = nil_words_cd(g);
            r_nil = std::max(r_nil, std::abs(w.d2.m[2][3] + 4.0 * s3 * (6.0 * t + 1.0)));
            // d_t is the central half-turn with shift -2 sqrt(3) (6t + 1)
            Mat4 d_expect = Mat4::identity();
            d_expect.m[0][0] = d_expect.m[1][1] = -1.0;
            d_expect.m[2][3] = -2.0 * s3 * (6.0 * t + 1.0);
            r_nil = std::max(r_nil, distance(w.d, d_expect));
        }
        out.push_back(residual_check("Nil words c_t, d_t, d_t^2 and their relation", r_nil, 1e-12));
    }

    {
        // Continuity across the wall: a(alpha, theta(t)) -> a_t as alpha -> pi/6.
        double r_lim = 0.0;
        for (double t : {-1.0, 0.0, 0.37, 5.0})
            for (double da : {1e-4, -1e-4}) {
                const double alpha = PI / 6.0 + da;
                const double theta = alpha + t * (6.0 * alpha - PI);
                const double S = s_of_alpha(alpha);
                const LRIsometry a{closed_form_M(alpha),
                                   Mat2::diagonal(std::polar(1.0, -theta), std::polar(1.0, theta)),
                                   S};
                const LRIsometry b{closed_form_N(alpha), a.right, S};
                const NilHolonomyPair nil = nil_generators(t);
                r_lim = std::max(r_lim, distance(lr_to_linear(a), nil.a));
                r_lim = std::max(r_lim, distance(lr_to_linear(b), nil.b));
            }
        out.push_back(residual_check("quadric generators converge to the Nil pair at the wall",
                                     r_lim, 5e-3));
    }
    return out;
}

std::vector<SummaryCheck> suite_surgery(std::uint64_t seed, int samples) {
    std::vector<SummaryCheck> out;
    (void)seed;
    (void)samples;

    {
        struct Example {
            long long p, q;
            double r;
            double expect;
        };
        const double P2 = PI * PI;
        const Example ex[] = {{-1, 1, 1.0, 2.0 * P2 / 120.0}, {1, 0, 5.0, 2.0 * P2 / 600.0},
                              {1, 0, 2.0, 2.0 * P2 / 6.0},    {1, 0, 3.0, 2.0 * P2 / 24.0},
                              {1, 0, 4.0, 2.0 * P2 / 96.0},   {1, 0, INFINITY, P2 / 12.0},
                              {1, 0, 6.0, 0.0}};
        double worst = 0.0;
        for (const auto &e : ex) {
            const SurgerySpec s = make_spec(e.p, e.q, e.r);
            const double v = volume(s);
            const double denom = e.expect > 0.0 ? e.expect : 1.0;  // relative, absolute at 0
            worst = std::max(worst, std::abs(v - e.expect) / denom);
            if (classify(s) == GeometryClass::Spherical || classify(s) == GeometryClass::SL2Rtilde)
                worst = std::max(worst, std::abs(volume_by_quadrature(s) - e.expect) / denom);
        }
        out.push_back(residual_check("reference volumes of the named fillings", worst, 1e-12));
    }

    {
        // Seifert roundtrip: integral invariants recover the slope and cone order.
        bool ok = true;
        for (long long p = -15; p <= 15; ++p)
            for (long long q = 0; q <= 10; ++q) {
                if (std::gcd(std::llabs(p), q) != 1 || p + 6 * q == 0) continue;
                if (p == 0 || (q == 0 && p != 1)) continue;
                for (long long r = 1; r <= 8; ++r) {
                    const SeifertData d = seifert_of(make_spec(p, q, make_rational(r, 1)));
                    if (d.p_back != p || d.q_back != q || d.r_back != r) ok = false;
                }
            }
        out.push_back(residual_check("Seifert invariants recover the surgery data", ok ? 0.0 : 1.0,
                                     0.0));
    }

    {
        double worst = 0.0;
        for (long long p : {1LL, 2LL, 3LL, -5LL, 7LL})
            for (long long q : {0LL, 1LL, 2LL}) {
                if (std::gcd(std::llabs(p), q) != 1 || p + 6 * q == 0) continue;
                const SurgerySpec s = make_spec(p, q, INFINITY);
                const SingularLength len = singular_length(s);
                worst = std::max(worst,
                                 std::abs(len.signed_length + PI / static_cast<double>(p)));
            }
        out.push_back(
            residual_check("singular length at r = infinity equals -pi/p", worst, 1e-12));
    }

    {
        double worst = 0.0;
        for (long long p = -9; p <= 9; ++p)
            for (long long q = 0; q <= 9; ++q) {
                if (p == 0 || std::gcd(std::llabs(p), q) != 1 || p + 6 * q == 0) continue;
                for (double r : {0.7, 1.0, 2.0, 9.0}) {
                    const SurgerySpec s = make_spec(p, q, r);
                    const ConeData c = surgery_params(s);
                    worst = std::max(worst, std::abs(2.0 * c.alpha *
                                                         std::abs(static_cast<double>(p + 6 * q)) -
                                                     cone_angle(s)));
                }
            }
        out.push_back(residual_check("cone angle consistency 2 alpha |p+6q| = 2 pi / r", worst,
                                     1e-12));
    }

    {
        // Holonomy handoff: classified geometric specs produce relation-true generators.
        double worst = 0.0;
        for (long long p = -7; p <= 7; ++p)
            for (long long q = 0; q <= 7; ++q) {
                if (p == 0 || std::gcd(std::llabs(p), q) != 1 || p + 6 * q == 0) continue;
                for (double r : {1.0, 3.0, 11.0}) {
                    const SurgerySpec s = make_spec(p, q, r);
                    const GeometryClass cls = classify(s);
                    if (cls != GeometryClass::Spherical && cls != GeometryClass::SL2Rtilde)
                        continue;
                    const ConeData c = surgery_params(s);
                    const RelatorReport rep = relator_check(generators_ab(c.alpha, c.theta));
                    worst = std::max(worst, rep.max_residual);
                }
            }
        out.push_back(residual_check("surgery cone data produces relation-true holonomy", worst,
                                     1e-9));
    }

    for (SummaryCheck &c : summary_checks()) out.push_back(std::move(c));
    return out;
}

}  // namespace

std::vector<SummaryCheck> run_verify_suite(const std::string &suite, std::uint64_t seed,
                                           int samples) {
    if (suite == "algebra") return suite_algebra(seed, samples);
    if (suite == "surface") return suite_surface(seed, samples);
    if (suite == "metric") return suite_metric(seed, samples);
    if (suite == "holonomy") return suite_holonomy(seed, samples);
    if (suite == "surgery") return suite_surgery(seed, samples);
    if (suite == "all") {
        std::vector<SummaryCheck> out;
        for (const char *name : {"algebra", "surface", "metric", "holonomy", "surgery"})
            for (SummaryCheck &c : run_verify_suite(name, seed, samples))
                out.push_back(std::move(c));
        return out;
    }
    throw GeomError(errc::usage,
                    "unknown suite (expected algebra, surface, metric, holonomy, surgery, all)");
}

bool all_pass(const std::vector<SummaryCheck> &checks) {
    for (const SummaryCheck &c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace trefoil
