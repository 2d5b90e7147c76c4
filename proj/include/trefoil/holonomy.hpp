#pragma once

#include <array>

#include "trefoil/quadric.hpp"

namespace trefoil {

// ---------------------------------------------------------------------------
// Holonomy representations of the trefoil groups
//
//     < a, b | a b a = b a b >
//
// into the isometries of X_{S(alpha)}.  The representation is rigid once the
// cone data (alpha, theta) is fixed:
//
//   R(alpha, theta)  rotation of angle 2 alpha about the central fiber
//                    composed with a fiber phase theta,
//   t_{+1}, t_{-1}   translations moving the base point to w = +1 / w = -1,
//   a = t_{+1} R t_{+1}^{-1},   b = t_{-1} R t_{-1}^{-1}.
//
// Both generators admit closed forms (used as the primary construction and
// cross-checked against the conjugation route):
//
//   a = (M, R'),  b = (N, R'),   R' = diag(e^{-i theta}, e^{i theta}),
//   M = 1/2 [[2 cos alpha + i,      -i s],
//            [i s,                   2 cos alpha - i]],  s = sqrt(2 cos 2 alpha - 1),
//   N = M with the off-diagonal signs flipped.

struct HolonomyPair {
    double alpha{0.0}, theta{0.0}, S{1.0};
    LRIsometry a, b;
};

// Rotation generator R(alpha, theta) = (diag(e^{i alpha}, e^{-i alpha}),
// diag(e^{-i theta}, e^{i theta})).
LRIsometry rotation_R(double alpha, double theta, double S);

// Translations t_{+1}, t_{-1} carrying the central fiber to the fibers over
// w = +1 and w = -1:
//
//     t_{+-1} = ( (1 - S)^{-1/2} [[1, +-sqrt(S)], [+-sqrt(S), 1]], id ).
//
// Degenerate at S = 1 (alpha = 0), where the target fibers run off to the
// boundary of the disk model.
LRIsometry translation_t(int sign, double S);

// Generators at cone data (alpha, theta).  alpha in [0, 5 pi/6) away from the
// Nil wall alpha = pi/6 (|1 - 2 sin alpha| < 1e-6 is refused; use
// nil_generators there).  alpha = 0 is allowed: the closed forms stay finite
// even though the translations t_{+-1} degenerate.
HolonomyPair generators_ab(double alpha, double theta);

// Residual max(|a - t1 R t1^-1|, |b - t-1 R t-1^-1|) of the two construction
// routes; requires alpha > 0 so the translations exist.
double two_route_residual(double alpha, double theta);

// ---------------------------------------------------------------------------
// Nil specialization.  On the wall alpha = pi/6 the quadric family collapses;
// the holonomy lives in the 4x4 affine model of Nil instead.  With
// s3 = sqrt(3) and a real parameter t:
//
//   a_t = [[ 1/2, -s3/2, 0,  1/2            ],
//          [ s3/2, 1/2,  0, -s3/2           ],
//          [ s3/2, -1/2, 1, -(s3/2)(8t + 1) ],
//          [ 0,    0,    0,  1              ]],
//
//   b_t = same with the last column of the first two rows negated and
//         third row [ -s3/2, 1/2, 1, -(s3/2)(8t + 1) ].
//
// They satisfy the trefoil relation a_t b_t a_t = b_t a_t b_t for every t; the
// surgery structure p/q corresponds to t = q / p.
struct NilHolonomyPair {
    double t{0.0};
    Mat4 a, b;
};

NilHolonomyPair nil_generators(double t);

// Relation residual |aba - bab| for a pair of 4x4 matrices.
double nil_relator_residual(const NilHolonomyPair &g);

// ---------------------------------------------------------------------------
// Derived words and the fundamental domain data.

// c = b a and d = b a b.  d has left part exactly diag(i, -i); d^2 is the
// pure fiber translation by phase 6 theta - pi.
struct WordsCD {
    LRIsometry c, d, d2;
};

WordsCD words_cd(const HolonomyPair &g);

// Nil versions: c_t = b_t a_t, d_t = b_t a_t b_t, and d_t^2, whose (3,4)
// entry -4 sqrt(3) (6t + 1) measures the fiber translation.
struct NilWordsCD {
    Mat4 c, d, d2;
};

NilWordsCD nil_words_cd(const NilHolonomyPair &g);

// Relation residual of the pair representation, measured both on the (L, R)
// pair and on the induced 4x4 linear action.
struct RelatorReport {
    double lr_residual{0.0};
    double linear_residual{0.0};
    double max_residual{0.0};
};

RelatorReport relator_check(const HolonomyPair &g);

// Fiber levels of the images of the fundamental-domain vertex A (the point
// over w = +1 on the zero section).  d carries A to the fiber over w = -1 at
// phase 3 theta - pi/2; c d carries A back over w = +1 at phase
// 5 theta + alpha - pi.  The slope of the resulting identification is
//
//     lambda = (alpha + 5 theta - pi) / (6 theta - pi),
//
// with vertical height 6 theta - pi (the phase of d^2).  Undefined when
// 6 theta - pi = 0.
struct DomainLevels {
    double level_dA{0.0};      // fiber phase of d(A), normalized vs 3 theta - pi/2
    double level_cdA{0.0};     // fiber phase of (c d)(A), normalized vs 5 theta + alpha - pi
    double height{0.0};        // 6 theta - pi
    double slope{0.0};         // (alpha + 5 theta - pi) / (6 theta - pi)
    double residual_dA{0.0};   // circle distance of measured vs predicted phase
    double residual_cdA{0.0};
};

DomainLevels domain_levels(const HolonomyPair &g);

// Closed forms for the left parts, exposed for cross-validation.
Mat2 closed_form_M(double alpha);
Mat2 closed_form_N(double alpha);

// Blockwise closed form of the 4x4 action of the generator a: lm(a) equals
// 1/2 [[A11, A12], [A21, A22]] in 2x2 blocks (b flips the signs of the
// off-diagonal blocks).  Exposed for cross-validation of lr_to_linear.
std::array<Mat4, 2> generators_linear_blocks(double alpha, double theta);

}  // namespace trefoil
