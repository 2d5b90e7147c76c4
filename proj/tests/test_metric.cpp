#include <doctest.h>

#include <cmath>

#include "trefoil/holonomy.hpp"
#include "trefoil/metric.hpp"
#include "trefoil/surface.hpp"

using namespace trefoil;

TEST_CASE("metric entries at a frozen chart point") {
    // (mu, nu, S) = (0.3, -0.2, -1):  D = 1.13.
    const SymMat3 q = metric_Q(0.3, -0.2, -1.0);
    const double D = 1.13, D2 = D * D;
    CHECK(std::abs(q(0, 0) - 1.04 / D2) < 1e-14);
    CHECK(std::abs(q(0, 1) - 0.06 / D2) < 1e-14);
    CHECK(std::abs(q(0, 2) - 0.2 / D) < 1e-14);
    CHECK(std::abs(q(1, 1) - 1.09 / D2) < 1e-14);
    CHECK(std::abs(q(1, 2) - 0.3 / D) < 1e-14);
    CHECK(q(2, 2) == 1.0);
    CHECK(q(0, 1) == q(1, 0));  // symmetry by construction
}

TEST_CASE("constant-curvature determinant identity") {
    // det Q = 1 / (1 -+ rho^2)^4 at S = +-1.
    for (double mu : {0.0, 0.3, -0.5}) {
        for (double nu : {0.0, -0.2, 0.4}) {
            const double r2 = mu * mu + nu * nu;
            CHECK(std::abs(det3(metric_Q(mu, nu, -1.0)) - 1.0 / std::pow(1.0 + r2, 4)) < 1e-12);
            if (r2 < 1.0)
                CHECK(std::abs(det3(metric_Q(mu, nu, 1.0)) - 1.0 / std::pow(1.0 - r2, 4)) <
                      1e-12);
        }
    }
}

TEST_CASE("normalized forms coincide with the family at S = +-1") {
    for (int sign : {+1, -1}) {
        const SymMat3 a = metric_Q(0.3, -0.2, static_cast<double>(sign));
        const SymMat3 b = metric_Q_normalized(0.3, -0.2, sign);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(std::abs(a(i, j) - b(i, j)) < 1e-14);
    }
}

TEST_CASE("metric is positive definite on the chart") {
    for (double S : {-1.0, -1.0 / 3.0, 0.5, 1.0}) {
        const double lim = S > 0.0 ? 0.9 / std::sqrt(S) : 1.8;
        for (double mu : {0.0, 0.4 * lim, -0.6 * lim}) {
            const auto ev = sym_eigenvalues(metric_Q(mu, 0.3 * lim, S));
            CHECK(ev[0] > 0.0);
            CHECK(ev[0] <= ev[1]);
            CHECK(ev[1] <= ev[2]);
        }
    }
    CHECK_THROWS_AS(metric_Q(2.0, 0.0, 1.0), GeomError);  // outside the disk
}

TEST_CASE("eigenvalue solver on known spectra") {
    SymMat3 d;
    d.m = {{{3.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}}};
    const auto ed = sym_eigenvalues(d);
    CHECK(ed[0] == 1.0);
    CHECK(ed[1] == 2.0);
    CHECK(ed[2] == 3.0);

    SymMat3 a;  // eigenvalues 1, 3 (2x2 block) and 5
    a.m = {{{2.0, 1.0, 0.0}, {1.0, 2.0, 0.0}, {0.0, 0.0, 5.0}}};
    const auto ea = sym_eigenvalues(a);
    CHECK(std::abs(ea[0] - 1.0) < 1e-12);
    CHECK(std::abs(ea[1] - 3.0) < 1e-12);
    CHECK(std::abs(ea[2] - 5.0) < 1e-12);
    CHECK(std::abs(det3(a) - 15.0) < 1e-12);
}

TEST_CASE("klein projection lands on the model quadric") {
    for (double S : {-1.0, -0.3, 0.5, 1.0}) {
        const double lim = S > 0.0 ? 0.8 / std::sqrt(S) : 1.5;
        CHECK(klein_constraint_residual(0.31 * lim, -0.22 * lim, S) < 1e-12);
        CHECK(klein_constraint_residual(0.0, 0.0, S) < 1e-14);
    }
    // frozen image at (0.3, -0.2, S = -1): (mu, nu, 1) / sqrt(1.13)
    const auto x = klein_projection(0.3, -0.2, -1.0);
    const double f = 1.0 / std::sqrt(1.13);
    CHECK(std::abs(x[0] - 0.3 * f) < 1e-14);
    CHECK(std::abs(x[1] + 0.2 * f) < 1e-14);
    CHECK(std::abs(x[2] - f) < 1e-14);
}

TEST_CASE("klein pullback recovers the base block exactly at S = -1") {
    const double h = 1e-6;
    for (double mu : {0.0, 0.3, -0.7}) {
        const SymMat3 q = metric_Q(mu, 0.25, -1.0);
        const auto g = klein_pullback(mu, 0.25, -1.0, h);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(std::abs(g[i][j] - q(i, j)) < 1e-5);
    }
}

TEST_CASE("klein pullback deviates from the base block away from S = -1") {
    // The round/Klein identification is special to S = -1; at S = +1 the
    // fibered metric mixes the fiber into the base block.
    const SymMat3 q = metric_Q(0.3, -0.2, 1.0);
    const auto g = klein_pullback(0.3, -0.2, 1.0, 1e-6);
    double dev = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dev = std::max(dev, std::abs(g[i][j] - q(i, j)));
    CHECK(dev > 1e-2);
}

TEST_CASE("rotations and holonomy generators pass the pullback test") {
    const double S = -1.0 / 3.0;  // alpha = pi/2
    const HolonomyPair g = generators_ab(PI / 2.0, 0.41);
    for (const LRIsometry &iso :
         {rotation_R(PI / 2.0, 0.7, S), g.a, g.b, translation_t(+1, S)}) {
        const PullbackReport rep = isometry_pullback_test(iso, 60, 20260819);
        CHECK(rep.sample_count == 60);
        CHECK(rep.max_residual < 1e-5);
    }
}

TEST_CASE("the pullback test refuses to certify a non-isometry") {
    // An SL(2, R)-shaped left factor does not act on the S = -1 sphere at all:
    // every sample fails the coordinate extraction and is counted as skipped,
    // so no sample certifies the pair.
    const double f = 1.2;
    const LRIsometry junk{Mat2{cplx{f, 0.0}, {}, {}, cplx{1.0 / f, 0.0}}, Mat2::identity(),
                          -1.0};
    const PullbackReport rep = isometry_pullback_test(junk, 40, 7);
    CHECK(rep.sample_count == 0);
    CHECK(rep.skipped > 0);
}
