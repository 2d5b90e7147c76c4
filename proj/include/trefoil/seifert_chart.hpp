#pragma once

#include "trefoil/quadric.hpp"

namespace trefoil {

// Product chart for the fibered model: a point over base coordinate
// w = mu + i nu at fiber phase zeta is
//
//     Phi(mu, nu, zeta) = sigma(w) * rho(zeta),
//
// with the horizontal section and fiber rotation
//
//     sigma(w) = (1 - S |w|^2)^{-1/2} [[1, sqrt(S) w], [sqrt(S) conj(w), 1]],
//     rho(zeta) = diag(e^{-i zeta}, e^{i zeta}).
//
// The chart satisfies p(Phi(mu, nu, zeta)) = mu + i nu exactly.  Its domain is
// 1 - S |w|^2 > 0: the disk of radius 1/sqrt(S) for S > 0, everything for
// S < 0 (the chart then misses the antipodal fiber |w| = infinity).

struct SeifertCoords {
    double mu{0.0}, nu{0.0}, zeta{0.0};
};

Mat2 section_sigma(cplx w, double S);
Mat2 fiber_rho(double zeta);

QuadricPoint from_seifert(const SeifertCoords &c, double S);

// Inverse chart.  zeta is reported in (-pi, pi]; the fiber is a circle of
// phases, so comparisons must be made modulo 2 pi.
SeifertCoords to_seifert(const QuadricPoint &p);

}  // namespace trefoil
