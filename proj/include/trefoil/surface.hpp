#pragma once

#include <vector>

#include "trefoil/errors.hpp"

namespace trefoil {

// ---------------------------------------------------------------------------
// Two-dimensional cone-surface layer: the base orbifold of the fibration and
// the hyperbolic/spherical triangle that uniformizes it.

// Signature of a closed orientable 2-orbifold / cone surface with cone points
// of angles 2 pi / r_i (r_i real >= 1, infinity allowed for cusps).
struct ConeSurfaceSig {
    int genus{0};
    std::vector<double> orders;  // r_i; may contain INFINITY
};

// Conical Euler characteristic  chi^c = 2 - 2 g - k + sum_i 1/r_i.
double chi_cone(const ConeSurfaceSig &sig);

enum class BaseGeometry { Hyperbolic, Euclidean, Spherical };

inline const char *to_string(BaseGeometry g) {
    switch (g) {
    case BaseGeometry::Hyperbolic: return "hyperbolic";
    case BaseGeometry::Euclidean: return "euclidean";
    case BaseGeometry::Spherical: return "spherical";
    }
    return "?";
}

// Geometry of the base orbifold (2, 3, r) of genus 0: spherical for
// 6/5 < r < 6, euclidean at r = 6, hyperbolic for r > 6 (r = infinity
// allowed).  Throws out_of_range for r <= 6/5, where chi^c >= 0 fails to
// pick a geometry in this family.
BaseGeometry base_geometry(double r);

// Curvature parameter of the model fibered over the (2, 3, r)-triangle base:
//
//     S(alpha) = (1 - 2 sin alpha) / (1 + 2 sin alpha),
//
// alpha in [0, 5 pi / 6); S(0) = 1, S(pi/6) = 0 (the Nil wall), minimum -1/3
// at alpha = pi/2.
double s_of_alpha(double alpha);

enum class TriangleRegime { Hyperbolic, Euclidean, Spherical, Cusp };

inline const char *to_string(TriangleRegime g) {
    switch (g) {
    case TriangleRegime::Hyperbolic: return "hyperbolic";
    case TriangleRegime::Euclidean: return "euclidean";
    case TriangleRegime::Spherical: return "spherical";
    case TriangleRegime::Cusp: return "cusp";
    }
    return "?";
}

// Isoceles triangle with apex angle 2 pi / 3 and base angles alpha, the
// half-turn domain of the (2, 3, r) base orbifold.
//
//   mu          half-base:  cosh mu = 1 / (2 sin alpha)  (hyperbolic),
//                           cos mu  = 1 / (2 sin alpha)  (spherical).
//   lambda_side apex-to-base altitude:
//                           cosh lambda = 2 cos alpha / sqrt(3)  (hyperbolic),
//                           cos lambda  = 2 cos alpha / sqrt(3)  (spherical).
//   area        |pi/3 - 2 alpha| by Gauss-Bonnet (curvature +-1).
//
// At alpha = pi/6 the triangle is euclidean; the returned representative has
// base 2 (vertices at -1 and +1), altitude 1/sqrt(3) and area 1/sqrt(3).
// At alpha = 0 the base angles vanish: a cusped hyperbolic triangle with
// mu = infinity and area pi/3.
struct TriangleSolution {
    double alpha{0.0};
    double S{1.0};
    double mu{0.0};           // half of the base side
    double lambda_side{0.0};  // altitude from the apex onto the base
    double area{0.0};
    TriangleRegime regime{TriangleRegime::Hyperbolic};
};

TriangleSolution solve_triangle(double alpha);

// Half-base mu computed through S alone:
//
//     cosh mu = (1 + S) / (1 - S)   (S > 0),
//     cos mu  = (1 + S) / (1 - S)   (S < 0),
//
// continuous across the euclidean wall (mu -> 0 as S -> 0).  Independent
// route to TriangleSolution::mu away from alpha = pi/6.
double alpha_to_model_distance(double alpha);

}  // namespace trefoil
