#pragma once

#include <cmath>
#include <complex>

namespace trefoil {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846;

// 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};
    cplx c{0.0, 0.0};
    cplx d{1.0, 0.0};

    static Mat2 identity() { return {}; }
    static Mat2 diagonal(cplx p, cplx q) { return {p, {0.0, 0.0}, {0.0, 0.0}, q}; }

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }

    Mat2 operator*(const Mat2 &o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator+(const Mat2 &o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2 &o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    Mat2 inverse() const {
        const cplx dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
};

inline double max_abs(const Mat2 &m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

// Max-entry distance; the residual measure used by all matrix identities here.
inline double distance(const Mat2 &x, const Mat2 &y) { return max_abs(x - y); }

inline Mat2 pow(Mat2 base, int n) {
    if (n < 0) return pow(base.inverse(), -n);
    Mat2 acc = Mat2::identity();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

}  // namespace trefoil
