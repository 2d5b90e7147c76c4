#pragma once

#include <array>
#include <cstdint>

#include "trefoil/quadric.hpp"
#include "trefoil/seifert_chart.hpp"

namespace trefoil {

// ---------------------------------------------------------------------------
// The left-invariant metric of X_S in Seifert coordinates (mu, nu, zeta) and
// the numerical isometry tests built on it.

// Symmetric 3x3 matrix stored by rows.
struct SymMat3 {
    std::array<std::array<double, 3>, 3> m{};

    double operator()(int i, int j) const { return m[i][j]; }
};

double det3(const SymMat3 &q);

// Eigenvalues of a symmetric 3x3 matrix, ascending (closed-form trigonometric
// method).
std::array<double, 3> sym_eigenvalues(const SymMat3 &q);

// Metric tensor at (mu, nu), independent of zeta.  With
// D = 1 - S (mu^2 + nu^2):
//
//         [ (nu^2 + 1)/D^2    -mu nu / D^2      nu / (S D)  ]
//     Q = [ -mu nu / D^2      (mu^2 + 1)/D^2   -mu / (S D)  ]
//         [ nu / (S D)        -mu / (S D)       1 / S^2     ],
//
// positive-definite on the chart domain D > 0.
SymMat3 metric_Q(double mu, double nu, double S);

// The constant-curvature specializations S = +1 and S = -1 in one formula
// (sign = +1 or -1), for direct comparison against metric_Q.
SymMat3 metric_Q_normalized(double mu, double nu, int sign);

// Projection to the Klein-type model: the image of (mu, nu) on the quadric
// surface  -x1^2 - x2^2 + x3^2 = 1/S  (S > 0, ambient form (+, +, -)) or the
// round sphere of radius 1/sqrt(|S|) (S < 0, euclidean ambient):
//
//     (mu, nu) -> (mu, nu, 1/sqrt(|S|)) / sqrt(D).
std::array<double, 3> klein_projection(double mu, double nu, double S);

// Constraint residual of the Klein image (should vanish on the chart domain).
double klein_constraint_residual(double mu, double nu, double S);

// Numerical pullback of the ambient form under klein_projection (central
// differences with step h), for comparison against the principal 2x2 block
// of metric_Q.
std::array<std::array<double, 2>, 2> klein_pullback(double mu, double nu, double S, double h);

// ---------------------------------------------------------------------------
// Finite-difference isometry test.  An isometry g of X_S induces a coordinate
// map (mu, nu, zeta) -> coordinates of g . Phi(mu, nu, zeta); the test
// measures |J^T Q(image) J - Q(point)| at random chart samples and reports
// the largest entrywise residual.

struct PullbackReport {
    double max_residual{0.0};
    int sample_count{0};
    int skipped{0};     // samples rejected (image out of chart, FD stencil out of domain)
    double fd_step{0.0};
};

PullbackReport isometry_pullback_test(const LRIsometry &g, int samples, std::uint64_t seed,
                                      double fd_step = 1e-6);

}  // namespace trefoil
