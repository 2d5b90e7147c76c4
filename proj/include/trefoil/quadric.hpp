#pragma once

#include <cmath>

#include "trefoil/errors.hpp"
#include "trefoil/mat2.hpp"
#include "trefoil/mat4.hpp"

namespace trefoil {

// The family of model spaces lives on the quadric
//
//     X_S = { (x, y, z, t) : t^2 + S^2 z^2 - S (x^2 + y^2) = 1 },   S != 0,
//
// a round 3-sphere for S < 0 and the group SL(2, R) (up to rescaling) for
// S > 0.  Points embed as 2x2 complex matrices
//
//     q = [[ t - i S z,      sqrt(S) (x + i y) ],
//          [ sqrt(S) (x - i y),   t + i S z    ]],      det q = 1,
//
// with sqrt(S) the principal branch (so sqrt(S) = i sqrt(-S) when S < 0).
// Isometries of the fibered structure act as x -> q x q' with q in X_S and
// q' = diag(e^{-i theta}, e^{i theta}); we carry such pairs explicitly.

inline cplx sqrt_S(double S) {
    if (S > 0.0) return {std::sqrt(S), 0.0};
    return {0.0, std::sqrt(-S)};
}

inline void require_curvature_param(double S) {
    if (!(S != 0.0) || !std::isfinite(S))
        throw GeomError(errc::out_of_range, "curvature parameter S must be finite and nonzero");
}

struct QuadricPoint {
    double x{0.0}, y{0.0}, z{0.0}, t{1.0};
    double S{-1.0};

    Vec4 vec() const { return {x, y, z, t}; }
};

// Residual of the defining equation; 0 on the quadric.
inline double quadric_residual(const QuadricPoint &p) {
    return std::abs(p.t * p.t + p.S * p.S * p.z * p.z - p.S * (p.x * p.x + p.y * p.y) - 1.0);
}

bool quadric_check(const QuadricPoint &p, double tol);
bool quadric_check(const QuadricPoint &p);

// Matrix embedding of a quadric point and its inverse.
Mat2 embed(const QuadricPoint &p);
QuadricPoint extract(const Mat2 &q, double S);

// Image of the base point (0, 0, 0, 1).
inline QuadricPoint base_point(double S) {
    require_curvature_param(S);
    return {0.0, 0.0, 0.0, 1.0, S};
}

// 4x4 matrix of left translation by q = (a, b, c, d) on quadric coordinates.
Mat4 left_linear(const QuadricPoint &q);

// 4x4 matrix of right translation by diag(e^{-i theta}, e^{i theta}).
Mat4 right_linear(double theta, double S);

// An orientation- and fibration-preserving isometry, stored as the pair
// (left, right) acting by x -> left * x * right.  `right` is always diagonal
// unitary diag(e^{-i theta}, e^{i theta}); `left` has det 1.
struct LRIsometry {
    Mat2 left = Mat2::identity();
    Mat2 right = Mat2::identity();
    double S{-1.0};
};

// Fiber phase theta of a right factor diag(e^{-i theta}, e^{i theta}).
inline double right_phase(const Mat2 &right) { return std::arg(right.d); }

inline LRIsometry lr_identity(double S) {
    require_curvature_param(S);
    return {Mat2::identity(), Mat2::identity(), S};
}

// Pair composition: apply g1 first, then g2.
LRIsometry lr_compose(const LRIsometry &g1, const LRIsometry &g2);
LRIsometry lr_inverse(const LRIsometry &g);
LRIsometry lr_power(const LRIsometry &g, int n);

QuadricPoint lr_apply(const LRIsometry &g, const QuadricPoint &p);

// The same isometry as a single 4x4 matrix on (x, y, z, t).
Mat4 lr_to_linear(const LRIsometry &g);

// Residual of the pair/linear agreement on a point: |lr_apply - lr_to_linear|.
double lr_agreement_residual(const LRIsometry &g, const QuadricPoint &p);

// ---------------------------------------------------------------------------
// Seifert projection onto the base disk/plane.
//
//     p(x, y, z, t) = (x + i y) / (t + i S z),
//
// infinite exactly when t + i S z = 0 (possible only for S < 0, where the
// base is a round 2-sphere).

struct DiskPoint {
    cplx w{0.0, 0.0};
    bool infinite{false};
};

DiskPoint project_p(const QuadricPoint &p);

// Induced homography of the left factor q on the base coordinate w:
//
//     h_q(w) = ((d - i S c) w + (a + i b)) / (S (a - i b) w + (d + i S c)),
//
// where (a, b, c, d) = (x, y, z, t) are the quadric coordinates of q.
// Right factors act trivially on the base, so this is also the action of the
// full pair (left, right).
DiskPoint homography_of(const LRIsometry &g, const DiskPoint &w);

// Derivative h'(w) of the induced homography at a finite non-pole w.
cplx homography_derivative(const LRIsometry &g, cplx w);

}  // namespace trefoil
