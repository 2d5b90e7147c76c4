#include "trefoil/surface.hpp"

#include <cmath>

#include "trefoil/mat2.hpp"

namespace trefoil {

double chi_cone(const ConeSurfaceSig &sig) {
    if (sig.genus < 0)
        throw GeomError(errc::out_of_range, "genus must be non-negative");
    double chi = 2.0 - 2.0 * sig.genus - static_cast<double>(sig.orders.size());
    for (double r : sig.orders) {
        if (!(r >= 1.0))
            throw GeomError(errc::out_of_range, "cone order must be >= 1");
        chi += std::isinf(r) ? 0.0 : 1.0 / r;
    }
    return chi;
}

BaseGeometry base_geometry(double r) {
    if (std::isnan(r) || r <= 1.2)
        throw GeomError(errc::out_of_range,
                        "no (2,3,r) geometry for r <= 6/5 in this family");
    if (r < 6.0) return BaseGeometry::Spherical;
    if (r == 6.0) return BaseGeometry::Euclidean;
    return BaseGeometry::Hyperbolic;  // includes r = infinity
}

double s_of_alpha(double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 5.0 * PI / 6.0))
        throw GeomError(errc::out_of_range, "alpha must lie in [0, 5pi/6)");
    const double s = std::sin(alpha);
    return (1.0 - 2.0 * s) / (1.0 + 2.0 * s);
}

TriangleSolution solve_triangle(double alpha) {
    if (!(alpha >= 0.0) || !(alpha < 5.0 * PI / 6.0))
        throw GeomError(errc::out_of_range, "alpha must lie in [0, 5pi/6)");
    const double S = s_of_alpha(alpha);
    const double s3 = std::sqrt(3.0);
    TriangleSolution sol;
    sol.alpha = alpha;
    sol.S = S;
    if (alpha == 0.0) {
        // Base angles zero: the cusped triangle of the modular-like orbifold.
        sol.regime = TriangleRegime::Cusp;
        sol.mu = INFINITY;
        sol.lambda_side = std::acosh(2.0 / s3);
        sol.area = PI / 3.0;
        return sol;
    }
    const double cos_mu = 1.0 / (2.0 * std::sin(alpha));    // cosh in the hyperbolic regime
    const double cos_lam = 2.0 * std::cos(alpha) / s3;      // likewise
    if (alpha < PI / 6.0) {
        sol.regime = TriangleRegime::Hyperbolic;
        sol.mu = std::acosh(cos_mu);
        sol.lambda_side = std::acosh(cos_lam);
        sol.area = PI / 3.0 - 2.0 * alpha;
    } else if (alpha == PI / 6.0) {
        // Euclidean representative: base 2 with vertices at -1 and +1.
        sol.regime = TriangleRegime::Euclidean;
        sol.mu = 1.0;
        sol.lambda_side = 1.0 / s3;
        sol.area = 1.0 / s3;
    } else {
        sol.regime = TriangleRegime::Spherical;
        sol.mu = std::acos(cos_mu);
        sol.lambda_side = std::acos(cos_lam);
        sol.area = 2.0 * alpha - PI / 3.0;
    }
    return sol;
}

double alpha_to_model_distance(double alpha) {
    const double S = s_of_alpha(alpha);
    if (S == 0.0) return 0.0;
    const double ratio = (1.0 + S) / (1.0 - S);
    return S > 0.0 ? std::acosh(ratio) : std::acos(ratio);
}

}  // namespace trefoil
