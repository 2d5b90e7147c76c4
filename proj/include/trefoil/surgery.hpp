#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trefoil/errors.hpp"
#include "trefoil/holonomy.hpp"

namespace trefoil {

// ---------------------------------------------------------------------------
// Surgery layer: cone manifolds (T_{p/q}, r) obtained from p/q surgery on the
// left-handed trefoil, with singular locus the surgery core and cone angle
// 2 pi / r.

// Exact rational, canonical with den > 0 and gcd(num, den) = 1; den = 0
// encodes +infinity (num = 1).
struct Rational {
    long long num{0};
    long long den{1};

    bool is_infinite() const { return den == 0; }
    double value() const;

    static Rational infinity() { return {1, 0}; }
};

Rational make_rational(long long num, long long den);

// A surgery specification: coefficient p/q (coprime, q >= 0, and p > 0 when
// q = 0) plus cone parameter r in (0, infinity].  p + 6q = 0 (the fiber
// slope p/q = -6) is refused as degenerate.
struct SurgerySpec {
    long long p{1};
    long long q{0};
    double r{1.0};
    bool r_infinite{false};
    Rational r_exact{1, 1};   // valid only when r_is_exact
    bool r_is_exact{false};

    double r_value() const;
};

SurgerySpec make_spec(long long p, long long q, double r);
SurgerySpec make_spec(long long p, long long q, Rational r);

enum class GeometryClass {
    Spherical,
    Nil,
    SL2Rtilde,
    Euclidean3,
    H2xR,
    S2xR,
    NoneKnown,
};

const char *to_string(GeometryClass g);

// Cone data of the structure.  With epsilon = sign(p + 6q):
//
//     alpha = pi / (r |p + 6q|),
//     theta = (2 pi epsilon / r - 2 pi q) / (2 p),
//
// normalized so alpha > 0.  (For r = infinity: alpha = 0,
// theta = -pi q / p.)  The identity (6 theta - pi) / (theta - alpha) = 6 + p/q
// ties the data back to the surgery slope when q != 0.
struct ConeData {
    double alpha{0.0};
    double theta{0.0};
    int epsilon{1};
};

ConeData surgery_params(const SurgerySpec &s);

// Geometry classification.  For p != 0, in terms of x = r |p + 6q|:
//
//     NoneKnown   x <= 6/5,
//     Spherical   6/5 < x < 6,
//     Nil         x = 6,
//     SL2Rtilde   6 < x <= infinity.
//
// For p = 0 the result is a product geometry: see zero_surgery_classify.
GeometryClass classify(const SurgerySpec &s);

// p = 0 (the unknot-like reducible filling direction): Euclidean3 at r = 1,
// H2xR for 1 < r <= infinity, S2xR for 1/5 < r < 1, NoneKnown for r <= 1/5.
GeometryClass zero_surgery_classify(double r, bool r_infinite);

// Interval (l_i, l_s) of cone parameters r giving a spherical structure for
// this slope: (6 / (5 |p + 6q|), 6 / |p + 6q|).  Requires p != 0.
std::pair<double, double> sphericity_limits(long long p, long long q);

// Cone angle along the singular core: 2 pi / r (0 when r = infinity).
double cone_angle(const SurgerySpec &s);

// Length of the singular geodesic:  lambda = 6 pi / (p r (p + 6q)) - pi / p,
// reported signed and absolute.  Requires p != 0 and a Spherical/SL2Rtilde/
// Nil structure to exist.
struct SingularLength {
    double signed_length{0.0};
    double abs_length{0.0};
};

SingularLength singular_length(const SurgerySpec &s);

// Volume of the cone manifold (Spherical and SL2Rtilde classes; Nil collapses
// to 0).  Closed form
//
//     V = | pi^2 (p r + 6 q r - 6)^2 / (12 p r^2 (p + 6 q)) |,
//
// with the r = infinity limit | pi^2 (p + 6 q) / (12 p) |.  Throws
// undefined_value for NoneKnown and not_applicable for p = 0.
double volume(const SurgerySpec &s);

// The same volume assembled as base-area x fiber-height / 4 through the cone
// data: V = |6 theta - pi| * (|6 alpha - pi| / 3) / 4 with the signed
// parametrization alpha = pi / (r (p + 6q)), theta = pi (1 - q r) / (p r).
// Independent route to `volume` for Spherical/SL2Rtilde specs.
double volume_by_quadrature(const SurgerySpec &s);

// ---------------------------------------------------------------------------
// Seifert fibered description.  (T_{p/q}, r) with integral data is the
// Seifert manifold
//
//     S(m, n) = ( O o 0 | -1; (2, 1), (3, 1), (m - 6n, n) ),   up to the
//
// common factor g = gcd(m, n): the underlying manifold is S(m/g, n/g) with a
// cone angle 2 pi / g along the exceptional fiber.  The correspondence is
// m = r (6 q + p), n = r q.
struct SeifertData {
    long long m{0}, n{0};       // raw invariants, gcd may exceed 1
    long long g{1};             // gcd(m, n) = cone order along the fiber
    long long p_back{0}, q_back{0};  // slope recovered from (m, n)
    long long r_back{1};
    int b{-1};                  // Euler-number offset of the symbol
    std::vector<std::pair<long long, long long>> pairs;  // (2,1), (3,1), (m-6n, n)
};

SeifertData seifert_of(const SurgerySpec &s);
SeifertData seifert_from_mn(long long m, long long n);

// Volume of S(m, n) when geometric: pi^2 (m - 6)^2 / |12 m (m - 6n)|.
double seifert_volume(long long m, long long n);

// ---------------------------------------------------------------------------
// Region plots over the surgery plane.

struct PlotWindow {
    double x0{0.0}, x1{1.0}, y0{0.0}, y1{1.0};
    double step{0.5};
};

// Plane 1: points (x, y) = (r p, r q); class decided by |x + 6 y| with the
// Nil lines x + 6y = +-6 and the lower limit lines x + 6y = +-6/5.
// Plane 2: Seifert invariants (m, n); class decided by m with the Nil line
// m = 6; lattice points m, n >= 0 integral with gcd(m, n) = 1 are marked.
std::string plot_csv(int plane, const PlotWindow &w);
std::string plot_svg(int plane, const PlotWindow &w);

PlotWindow default_window(int plane);

// ---------------------------------------------------------------------------
// Closed-form cross-checks spanning the surgery layer (used by the CLI
// verification suite).

struct SummaryCheck {
    std::string name;
    double max_residual{0.0};
    double tolerance{0.0};
    bool pass{false};
    std::string detail;
};

std::vector<SummaryCheck> summary_checks();

// Euclidean/Nil translation lengths gamma_e(x) = 5 pi x / 3 and
// gamma_N(x) = pi x / 3 of the x-th power of the fiber direction in the
// degenerate limits.
double gamma_e(double x);
double gamma_N(double x);

}  // namespace trefoil
