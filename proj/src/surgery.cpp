#include "trefoil/surgery.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "trefoil/numformat.hpp"
#include "trefoil/surface.hpp"

namespace trefoil {

double Rational::value() const {
    if (den == 0) return INFINITY;
    return static_cast<double>(num) / static_cast<double>(den);
}

Rational make_rational(long long num, long long den) {
    if (den == 0) {
        if (num <= 0) throw GeomError(errc::out_of_range, "rational infinity must be positive");
        return Rational::infinity();
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(std::llabs(num), den);
    return {num / g, den / g};
}

double SurgerySpec::r_value() const { return r_infinite ? INFINITY : r; }

namespace {
SurgerySpec canonicalize(long long p, long long q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) {
        if (p == 0) throw GeomError(errc::usage, "slope 0/0 is not a surgery coefficient");
        if (p < 0) p = -p;
    }
    if (std::gcd(std::llabs(p), q) != 1)
        throw GeomError(errc::usage, "surgery coefficients must be coprime");
    if (p + 6 * q == 0)
        throw GeomError(errc::degenerate,
                        "slope -6 is the fiber slope: the filling is not a cone manifold");
    SurgerySpec s;
    s.p = p;
    s.q = q;
    return s;
}
}  // namespace

SurgerySpec make_spec(long long p, long long q, double r) {
    SurgerySpec s = canonicalize(p, q);
    if (std::isinf(r) && r > 0) {
        s.r_infinite = true;
        s.r = INFINITY;
    } else {
        if (!(r > 0.0) || !std::isfinite(r))
            throw GeomError(errc::out_of_range, "cone parameter r must be positive or infinity");
        s.r = r;
    }
    return s;
}

SurgerySpec make_spec(long long p, long long q, Rational r) {
    SurgerySpec s = canonicalize(p, q);
    if (r.is_infinite()) {
        s.r_infinite = true;
        s.r = INFINITY;
    } else {
        if (r.num <= 0)
            throw GeomError(errc::out_of_range, "cone parameter r must be positive or infinity");
        s.r = r.value();
    }
    s.r_exact = r;
    s.r_is_exact = true;
    return s;
}

const char *to_string(GeometryClass g) {
    switch (g) {
    case GeometryClass::Spherical: return "spherical";
    case GeometryClass::Nil: return "nil";
    case GeometryClass::SL2Rtilde: return "sl2r";
    case GeometryClass::Euclidean3: return "euclidean";
    case GeometryClass::H2xR: return "h2xr";
    case GeometryClass::S2xR: return "s2xr";
    case GeometryClass::NoneKnown: return "unknown";
    }
    return "?";
}

ConeData surgery_params(const SurgerySpec &s) {
    if (s.p == 0)
        throw GeomError(errc::not_applicable, "cone data requires p != 0 (p = 0 gives a product)");
    const double k = static_cast<double>(s.p + 6 * s.q);
    const double pd = static_cast<double>(s.p);
    ConeData c;
    c.epsilon = (s.p + 6 * s.q) > 0 ? 1 : -1;
    if (s.r_infinite) {
        c.alpha = 0.0;
        c.theta = -PI * static_cast<double>(s.q) / pd;
    } else {
        c.alpha = PI / (s.r * std::abs(k));
        c.theta = (2.0 * PI * c.epsilon / s.r - 2.0 * PI * static_cast<double>(s.q)) / (2.0 * pd);
    }
    return c;
}

GeometryClass zero_surgery_classify(double r, bool r_infinite) {
    if (r_infinite) return GeometryClass::H2xR;
    if (!(r > 0.0))
        throw GeomError(errc::out_of_range, "cone parameter r must be positive or infinity");
    if (std::abs(r - 1.0) <= 1e-9) return GeometryClass::Euclidean3;
    if (r > 1.0) return GeometryClass::H2xR;
    if (r > 0.2) return GeometryClass::S2xR;
    return GeometryClass::NoneKnown;
}

GeometryClass classify(const SurgerySpec &s) {
    if (s.p == 0) return zero_surgery_classify(s.r, s.r_infinite);
    const long long k = std::llabs(s.p + 6 * s.q);
    if (s.r_infinite) return GeometryClass::SL2Rtilde;
    if (s.r_is_exact) {
        // Exact arithmetic on x = r k against the walls x = 6 and x = 6/5.
        const long long lhs = s.r_exact.num * k;
        if (lhs == 6 * s.r_exact.den) return GeometryClass::Nil;
        if (lhs > 6 * s.r_exact.den) return GeometryClass::SL2Rtilde;
        if (5 * lhs > 6 * s.r_exact.den) return GeometryClass::Spherical;
        return GeometryClass::NoneKnown;
    }
    const double x = s.r * static_cast<double>(k);
    if (std::abs(x - 6.0) <= 1e-9) return GeometryClass::Nil;
    if (x > 6.0) return GeometryClass::SL2Rtilde;
    if (x > 1.2) return GeometryClass::Spherical;
    return GeometryClass::NoneKnown;
}

std::pair<double, double> sphericity_limits(long long p, long long q) {
    const SurgerySpec s = canonicalize(p, q);  // validates coprimality and the slope
    if (s.p == 0)
        throw GeomError(errc::not_applicable, "p = 0 fillings are products, never spherical");
    const double k = std::abs(static_cast<double>(s.p + 6 * s.q));
    return {6.0 / (5.0 * k), 6.0 / k};
}

double cone_angle(const SurgerySpec &s) {
    return s.r_infinite ? 0.0 : 2.0 * PI / s.r;
}

SingularLength singular_length(const SurgerySpec &s) {
    if (s.p == 0)
        throw GeomError(errc::not_applicable, "p = 0 fillings have no singular core geodesic");
    const GeometryClass cls = classify(s);
    if (cls == GeometryClass::NoneKnown)
        throw GeomError(errc::undefined_value, "no geometric structure on this filling");
    const double pd = static_cast<double>(s.p);
    const double k = static_cast<double>(s.p + 6 * s.q);
    SingularLength len;
    if (s.r_infinite) len.signed_length = -PI / pd;
    else len.signed_length = 6.0 * PI / (pd * s.r * k) - PI / pd;
    len.abs_length = std::abs(len.signed_length);
    return len;
}

double volume(const SurgerySpec &s) {
    if (s.p == 0)
        throw GeomError(errc::not_applicable, "p = 0 fillings carry product geometries");
    const GeometryClass cls = classify(s);
    if (cls == GeometryClass::NoneKnown)
        throw GeomError(errc::undefined_value, "no geometric structure on this filling");
    if (cls == GeometryClass::Nil) return 0.0;
    const double pd = static_cast<double>(s.p);
    const double k = static_cast<double>(s.p + 6 * s.q);
    if (s.r_infinite) return std::abs(PI * PI * k / (12.0 * pd));
    const double num = pd * s.r + 6.0 * static_cast<double>(s.q) * s.r - 6.0;
    return std::abs(PI * PI * num * num / (12.0 * pd * s.r * s.r * k));
}

double volume_by_quadrature(const SurgerySpec &s) {
    const GeometryClass cls = classify(s);
    if (cls != GeometryClass::Spherical && cls != GeometryClass::SL2Rtilde)
        throw GeomError(errc::not_applicable,
                        "geometric volume assembly needs a spherical or sl2r structure");
    // Signed cone data (alpha may be negative when p + 6q < 0): the fiber
    // height |6 theta - pi| and the Gauss-Bonnet area |6 alpha - pi| / 3 of
    // the base domain assemble into the volume with the fibration factor 1/4.
    const double pd = static_cast<double>(s.p);
    const double k = static_cast<double>(s.p + 6 * s.q);
    double alpha_s, theta_s;
    if (s.r_infinite) {
        alpha_s = 0.0;
        theta_s = -PI * static_cast<double>(s.q) / pd;
    } else {
        alpha_s = PI / (s.r * k);
        theta_s = PI * (1.0 / (pd * s.r) - static_cast<double>(s.q) / pd);
    }
    const double height = std::abs(6.0 * theta_s - PI);
    const double base_area = std::abs(6.0 * alpha_s - PI) / 3.0;
    return height * base_area / 4.0;
}

// --- Seifert descriptions ---------------------------------------------------

namespace {
SeifertData seifert_fill(long long m, long long n) {
    if (m == 0 && n == 0)
        throw GeomError(errc::out_of_range, "Seifert invariants (0, 0) are void");
    if (n < 0) throw GeomError(errc::out_of_range, "Seifert invariant n must be >= 0");
    SeifertData d;
    d.m = m;
    d.n = n;
    d.g = std::gcd(std::llabs(m), n);
    d.b = -1;
    d.pairs = {{2, 1}, {3, 1}, {m - 6 * n, n}};
    d.p_back = (m - 6 * n) / d.g;
    d.q_back = n / d.g;
    d.r_back = d.g;
    return d;
}
}  // namespace

SeifertData seifert_of(const SurgerySpec &s) {
    long long m = 0, n = 0;
    if (s.r_infinite)
        throw GeomError(errc::not_representable, "no integral Seifert symbol at r = infinity");
    if (s.r_is_exact) {
        const long long a = s.r_exact.num, b = s.r_exact.den;
        const long long km = a * (6 * s.q + s.p), kn = a * s.q;
        if (km % b != 0 || kn % b != 0)
            throw GeomError(errc::not_representable,
                            "r does not scale (p, q) to integral Seifert invariants");
        m = km / b;
        n = kn / b;
    } else {
        const double md = s.r * static_cast<double>(6 * s.q + s.p);
        const double nd = s.r * static_cast<double>(s.q);
        m = std::llround(md);
        n = std::llround(nd);
        if (std::abs(md - static_cast<double>(m)) > 1e-9 ||
            std::abs(nd - static_cast<double>(n)) > 1e-9)
            throw GeomError(errc::not_representable,
                            "r does not scale (p, q) to integral Seifert invariants");
    }
    return seifert_fill(m, n);
}

SeifertData seifert_from_mn(long long m, long long n) { return seifert_fill(m, n); }

double seifert_volume(long long m, long long n) {
    if (m == 0)
        throw GeomError(errc::not_applicable, "S(0, n) has no geometric volume here");
    if (m - 6 * n == 0) {
        if (m == 6 && n == 1)
            throw GeomError(errc::not_applicable, "S(6, 1) is the zero filling: product geometry");
        throw GeomError(errc::not_applicable, "m = 6n is the zero-slope family: product geometry");
    }
    const double md = static_cast<double>(m);
    return PI * PI * (md - 6.0) * (md - 6.0) /
           std::abs(12.0 * md * static_cast<double>(m - 6 * n));
}

// --- Region plots ------------------------------------------------------------

namespace {

const char *class_color(const char *cls) {
    if (cls[0] == 's' && cls[1] == 'l') return "#4c78a8";   // sl2r
    if (cls[0] == 'n') return "#54a24b";                    // nil
    if (cls[0] == 's') return "#e45756";                    // spherical
    return "#c8c8c8";                                       // unknown
}

const char *p1_class(double x, double y) {
    const double s = std::abs(x + 6.0 * y);
    if (s == 6.0) return "nil";
    if (s > 6.0) return "sl2r";
    if (s > 1.2) return "spherical";
    return "unknown";
}

const char *p2_class(double m) {
    if (m == 6.0) return "nil";
    if (m > 6.0) return "sl2r";
    if (m > 1.2) return "spherical";
    return "unknown";
}

bool p2_marked(double m, double n) {
    if (m < 0.0 || n < 0.0) return false;
    if (m != std::floor(m) || n != std::floor(n)) return false;
    const long long mi = static_cast<long long>(m), ni = static_cast<long long>(n);
    return std::gcd(mi, ni) == 1;
}

int grid_count(double lo, double hi, double step) {
    return static_cast<int>(std::llround((hi - lo) / step)) + 1;
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void validate_window(const PlotWindow &w) {
    if (!(w.step > 0.0) || !(w.x1 > w.x0) || !(w.y1 > w.y0))
        throw GeomError(errc::out_of_range, "plot window must be non-empty with positive step");
}

}  // namespace

PlotWindow default_window(int plane) {
    if (plane == 1) return {-12.0, 12.0, 0.0, 6.0, 0.5};
    if (plane == 2) return {0.0, 12.0, 0.0, 12.0, 0.5};
    throw GeomError(errc::out_of_range, "plane must be 1 or 2");
}

std::string plot_csv(int plane, const PlotWindow &w) {
    validate_window(w);
    if (plane != 1 && plane != 2)
        throw GeomError(errc::out_of_range, "plane must be 1 or 2");
    std::string out;
    const int nx = grid_count(w.x0, w.x1, w.step), ny = grid_count(w.y0, w.y1, w.step);
    if (plane == 1) {
        out += "x,y,class\n";
        for (int iy = 0; iy < ny; ++iy) {
            const double y = w.y0 + iy * w.step;
            for (int ix = 0; ix < nx; ++ix) {
                const double x = w.x0 + ix * w.step;
                out += fmt17(x);
                out += ",";
                out += fmt17(y);
                out += ",";
                out += p1_class(x, y);
                out += "\n";
            }
        }
    } else {
        out += "m,n,class,marked\n";
        for (int iy = 0; iy < ny; ++iy) {
            const double n = w.y0 + iy * w.step;
            for (int ix = 0; ix < nx; ++ix) {
                const double m = w.x0 + ix * w.step;
                out += fmt17(m);
                out += ",";
                out += fmt17(n);
                out += ",";
                out += p2_class(m);
                out += ",";
                out += p2_marked(m, n) ? "1" : "0";
                out += "\n";
            }
        }
    }
    return out;
}

std::string plot_svg(int plane, const PlotWindow &w) {
    validate_window(w);
    if (plane != 1 && plane != 2)
        throw GeomError(errc::out_of_range, "plane must be 1 or 2");
    const double margin = 42.0, width = 760.0;
    const double scale = (width - 2.0 * margin) / (w.x1 - w.x0);
    const double height = 2.0 * margin + (w.y1 - w.y0) * scale;
    const auto sx = [&](double x) { return margin + (x - w.x0) * scale; };
    const auto sy = [&](double y) { return height - margin - (y - w.y0) * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt6(width) +
           "\" height=\"" + fmt6(height) + "\" viewBox=\"0 0 " + fmt6(width) + " " +
           fmt6(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + fmt6(width) + "\" height=\"" + fmt6(height) +
           "\" fill=\"#ffffff\"/>\n";

    // classified grid
    const double cell = w.step * scale * 0.92;
    const int nx = grid_count(w.x0, w.x1, w.step), ny = grid_count(w.y0, w.y1, w.step);
    for (int iy = 0; iy < ny; ++iy) {
        const double y = w.y0 + iy * w.step;
        for (int ix = 0; ix < nx; ++ix) {
            const double x = w.x0 + ix * w.step;
            const char *cls = plane == 1 ? p1_class(x, y) : p2_class(x);
            out += "<rect x=\"" + fmt6(sx(x) - cell / 2.0) + "\" y=\"" +
                   fmt6(sy(y) - cell / 2.0) + "\" width=\"" + fmt6(cell) + "\" height=\"" +
                   fmt6(cell) + "\" fill=\"" + class_color(cls) + "\"/>\n";
        }
    }

    const auto line = [&](double xa, double ya, double xb, double yb, const char *stroke,
                          bool dashed) {
        out += "<line x1=\"" + fmt6(sx(xa)) + "\" y1=\"" + fmt6(sy(ya)) + "\" x2=\"" +
               fmt6(sx(xb)) + "\" y2=\"" + fmt6(sy(yb)) + "\" stroke=\"" + stroke +
               "\" stroke-width=\"2\"" + (dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
    };

    if (plane == 1) {
        // walls x + 6y = c clipped to the window (y decreasing in x)
        const auto wall = [&](double c, const char *stroke, bool dashed) {
            const double xa = std::max(w.x0, c - 6.0 * w.y1);
            const double xb = std::min(w.x1, c - 6.0 * w.y0);
            if (xa < xb) line(xa, (c - xa) / 6.0, xb, (c - xb) / 6.0, stroke, dashed);
        };
        wall(6.0, "#14532d", false);
        wall(-6.0, "#14532d", false);
        wall(1.2, "#6b21a8", true);
        wall(-1.2, "#6b21a8", true);
    } else {
        if (6.0 >= w.x0 && 6.0 <= w.x1) line(6.0, w.y0, 6.0, w.y1, "#14532d", false);
        if (1.2 >= w.x0 && 1.2 <= w.x1) line(1.2, w.y0, 1.2, w.y1, "#6b21a8", true);
        // marked integral Seifert invariants
        for (int iy = 0; iy < ny; ++iy) {
            const double n = w.y0 + iy * w.step;
            for (int ix = 0; ix < nx; ++ix) {
                const double m = w.x0 + ix * w.step;
                if (!p2_marked(m, n)) continue;
                const double r0 = std::max(2.5, cell * 0.38);
                out += "<path d=\"M " + fmt6(sx(m)) + " " + fmt6(sy(n) - r0) + " L " +
                       fmt6(sx(m) + r0) + " " + fmt6(sy(n)) + " L " + fmt6(sx(m)) + " " +
                       fmt6(sy(n) + r0) + " L " + fmt6(sx(m) - r0) + " " + fmt6(sy(n)) +
                       " Z\" fill=\"#1a1a1a\"/>\n";
            }
        }
    }

    // window corners for orientation
    out += "<text x=\"" + fmt6(sx(w.x0)) + "\" y=\"" + fmt6(height - 12.0) +
           "\" font-size=\"12\" fill=\"#444444\">" + fmt6(w.x0) + "</text>\n";
    out += "<text x=\"" + fmt6(sx(w.x1) - 18.0) + "\" y=\"" + fmt6(height - 12.0) +
           "\" font-size=\"12\" fill=\"#444444\">" + fmt6(w.x1) + "</text>\n";
    out += "<text x=\"8\" y=\"" + fmt6(sy(w.y1)) + "\" font-size=\"12\" fill=\"#444444\">" +
           fmt6(w.y1) + "</text>\n";
    out += "<text x=\"8\" y=\"" + fmt6(sy(w.y0)) + "\" font-size=\"12\" fill=\"#444444\">" +
           fmt6(w.y0) + "</text>\n";
    out += "</svg>\n";
    return out;
}

// --- Cross-cutting summary checks ---------------------------------------------

double gamma_e(double x) { return 5.0 * PI * x / 3.0; }
double gamma_N(double x) { return PI * x / 3.0; }

std::vector<SummaryCheck> summary_checks() {
    std::vector<SummaryCheck> out;

    {
        SummaryCheck c{"gamma_e equals 5 gamma_N", 0.0, 1e-12, false, ""};
        for (int x = 1; x <= 20; ++x)
            c.max_residual = std::max(c.max_residual, std::abs(gamma_e(x) - 5.0 * gamma_N(x)));
        c.pass = c.max_residual <= c.tolerance;
        out.push_back(c);
    }

    {
        SummaryCheck c{"spherical orbifold cone orders are exactly {2,3,4,5}", 0.0, 0.0, false, ""};
        std::set<long long> orders;
        bool offenders = false;
        for (long long p = -20; p <= 20; ++p)
            for (long long q = 0; q <= 20; ++q) {
                if (std::gcd(std::llabs(p), q) != 1 || p + 6 * q == 0) continue;
                for (long long r = 2; r <= 100; ++r) {
                    const SurgerySpec s = make_spec(p, q, make_rational(r, 1));
                    if (classify(s) == GeometryClass::Spherical) {
                        orders.insert(r);
                        if (r < 2 || r > 5) offenders = true;
                    }
                }
            }
        const bool complete = orders == std::set<long long>{2, 3, 4, 5};
        c.max_residual = (offenders || !complete) ? 1.0 : 0.0;
        c.pass = !offenders && complete;
        for (long long r : orders) c.detail += (c.detail.empty() ? "" : ",") + std::to_string(r);
        out.push_back(c);
    }

    {
        SummaryCheck c{"S(6, y) with gcd(6, y) = 1 is non-singular Nil (y > 1)", 0.0, 0.0, false, ""};
        bool ok = true;
        for (long long y = 1; y <= 25; ++y) {
            if (std::gcd(6LL, y) != 1) continue;
            const SeifertData d = seifert_from_mn(6, y);
            if (d.r_back != 1) ok = false;
            if (d.p_back == 0) {
                // y = 1 is the zero filling: an honest torus bundle with
                // periodic monodromy, so Euclidean rather than Nil.
                const GeometryClass zc = zero_surgery_classify(1.0, false);
                if (zc != GeometryClass::Euclidean3) ok = false;
                continue;
            }
            const SurgerySpec s = make_spec(d.p_back, d.q_back, make_rational(d.r_back, 1));
            if (classify(s) != GeometryClass::Nil) ok = false;
        }
        c.max_residual = ok ? 0.0 : 1.0;
        c.pass = ok;
        out.push_back(c);
    }

    {
        SummaryCheck c{"S(6, 2y) and S(6, 3y) are Nil orbifolds of orders 2 and 3",
                       0.0, 0.0, false, ""};
        bool ok = true;
        for (long long y = 1; y <= 12; ++y) {
            if (std::gcd(3LL, y) == 1) {  // keep gcd(6, 2y) = 2
                const SeifertData d = seifert_from_mn(6, 2 * y);
                if (d.r_back != 2) ok = false;
                const SurgerySpec s = make_spec(d.p_back, d.q_back, make_rational(d.r_back, 1));
                if (classify(s) != GeometryClass::Nil) ok = false;
            }
            if (std::gcd(2LL, y) == 1) {  // keep gcd(6, 3y) = 3
                const SeifertData d = seifert_from_mn(6, 3 * y);
                if (d.r_back != 3) ok = false;
                const SurgerySpec s = make_spec(d.p_back, d.q_back, make_rational(d.r_back, 1));
                if (classify(s) != GeometryClass::Nil) ok = false;
            }
        }
        c.max_residual = ok ? 0.0 : 1.0;
        c.pass = ok;
        out.push_back(c);
    }

    {
        SummaryCheck c{"cone data satisfies (6 theta - pi)/(theta - alpha) = 6 + p/q",
                       0.0, 1e-9, false, ""};
        for (long long p = -9; p <= 9; ++p)
            for (long long q = 1; q <= 9; ++q) {
                if (std::gcd(std::llabs(p), q) != 1 || p + 6 * q == 0 || p == 0) continue;
                for (double r : {1.0, 2.0, 3.5, 7.0}) {
                    const ConeData cd = surgery_params(make_spec(p, q, r));
                    if (std::abs(cd.theta - cd.alpha) < 1e-12) continue;
                    const double lhs = (6.0 * cd.theta - PI) / (cd.theta - cd.alpha);
                    const double rhs = 6.0 + static_cast<double>(p) / static_cast<double>(q);
                    c.max_residual = std::max(c.max_residual, std::abs(lhs - rhs));
                }
            }
        c.pass = c.max_residual <= c.tolerance;
        out.push_back(c);
    }

    {
        SummaryCheck c{"closed-form volume equals the geometric assembly", 0.0, 1e-12, false, ""};
        UniformSampler rng(20260819u);
        int tested = 0;
        while (tested < 200) {
            const long long p = static_cast<long long>(std::floor(rng.next(-20.0, 21.0)));
            const long long q = static_cast<long long>(std::floor(rng.next(0.0, 21.0)));
            const double r = rng.next(0.05, 30.0);
            if (std::gcd(std::llabs(p), q) != 1 || p + 6 * q == 0 || p == 0) continue;
            const SurgerySpec s = make_spec(p, q, r);
            const GeometryClass cls = classify(s);
            if (cls != GeometryClass::Spherical && cls != GeometryClass::SL2Rtilde) continue;
            const double v1 = volume(s), v2 = volume_by_quadrature(s);
            c.max_residual = std::max(c.max_residual, std::abs(v1 - v2) / std::max(1.0, v1));
            ++tested;
        }
        c.pass = c.max_residual <= c.tolerance;
        out.push_back(c);
    }

    {
        SummaryCheck c{"classification agrees with the sphericity interval", 0.0, 0.0, false, ""};
        bool ok = true;
        for (long long p = -12; p <= 12; ++p)
            for (long long q = 0; q <= 12; ++q) {
                if (std::gcd(std::llabs(p), q) != 1 || p + 6 * q == 0 || p == 0) continue;
                const auto [li, ls] = sphericity_limits(p, q);
                for (double r = 0.1; r <= 12.0; r += 0.1) {
                    const SurgerySpec s = make_spec(p, q, r);
                    const bool spherical = classify(s) == GeometryClass::Spherical;
                    const bool inside = r > li + 1e-9 && r < ls - 1e-9;
                    const bool outside = r < li - 1e-9 || r > ls + 1e-9;
                    if ((spherical && outside) || (!spherical && inside)) ok = false;
                }
            }
        c.max_residual = ok ? 0.0 : 1.0;
        c.pass = ok;
        out.push_back(c);
    }

    return out;
}

}  // namespace trefoil
