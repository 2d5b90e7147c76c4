#pragma once

#include <array>
#include <cmath>

namespace trefoil {

// Point of the ambient R^4 with quadric coordinates (x, y, z, t).
struct Vec4 {
    double x{0.0}, y{0.0}, z{0.0}, t{1.0};

    Vec4 operator-(const Vec4 &o) const { return {x - o.x, y - o.y, z - o.z, t - o.t}; }
};

inline double max_abs(const Vec4 &v) {
    return std::max(std::max(std::abs(v.x), std::abs(v.y)),
                    std::max(std::abs(v.z), std::abs(v.t)));
}

// Real 4x4 matrix acting on column vectors (x, y, z, t)^T.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
        return r;
    }

    Mat4 operator*(const Mat4 &o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    Mat4 operator-(const Mat4 &o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }

    Vec4 apply(const Vec4 &v) const {
        const std::array<double, 4> in{v.x, v.y, v.z, v.t};
        std::array<double, 4> out{};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) out[i] += m[i][k] * in[k];
        return {out[0], out[1], out[2], out[3]};
    }
};

inline double max_abs(const Mat4 &a) {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(a.m[i][j]));
    return r;
}

inline double distance(const Mat4 &x, const Mat4 &y) { return max_abs(x - y); }

}  // namespace trefoil
