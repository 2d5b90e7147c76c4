#include "trefoil/seifert_chart.hpp"

namespace trefoil {

Mat2 section_sigma(cplx w, double S) {
    require_curvature_param(S);
    const double D = 1.0 - S * std::norm(w);
    if (D <= 0.0)
        throw GeomError(errc::out_of_domain, "base point outside the chart disk |w| < 1/sqrt(S)");
    const double f = 1.0 / std::sqrt(D);
    const cplx rs = sqrt_S(S);
    return {cplx{f, 0.0}, rs * w * f, rs * std::conj(w) * f, cplx{f, 0.0}};
}

Mat2 fiber_rho(double zeta) {
    return Mat2::diagonal(std::polar(1.0, -zeta), std::polar(1.0, zeta));
}

QuadricPoint from_seifert(const SeifertCoords &c, double S) {
    return extract(section_sigma(cplx{c.mu, c.nu}, S) * fiber_rho(c.zeta), S);
}

SeifertCoords to_seifert(const QuadricPoint &p) {
    const DiskPoint w = project_p(p);
    if (w.infinite)
        throw GeomError(errc::out_of_domain, "point on the antipodal fiber has no chart coordinates");
    if (p.S > 0.0 && 1.0 - p.S * std::norm(w.w) <= 0.0)
        throw GeomError(errc::out_of_domain, "projection escapes the chart disk");
    // Peel off the section: what remains is a pure fiber rotation rho(zeta).
    const Mat2 rest = section_sigma(w.w, p.S).inverse() * embed(p);
    return {w.w.real(), w.w.imag(), std::arg(rest.d)};
}

}  // namespace trefoil
