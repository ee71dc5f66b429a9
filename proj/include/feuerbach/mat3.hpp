#pragma once
// Exact 3x3 matrices and 3-vectors over tower elements. Everything here is
// plain linear algebra; projective interpretations live in the geometry
// headers.

#include <array>
#include <span>

#include "errors.hpp"
#include "tower.hpp"

namespace feuerbach {

using Vec3 = std::array<FieldElem, 3>;

struct Mat3 {
    std::array<FieldElem, 9> e;  // row-major

    FieldElem& at(int r, int c) { return e[static_cast<size_t>(3 * r + c)]; }
    const FieldElem& at(int r, int c) const { return e[static_cast<size_t>(3 * r + c)]; }

    static Mat3 identity() {
        return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
    }
    static Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
        return Mat3{{a[0], b[0], c[0], a[1], b[1], c[1], a[2], b[2], c[2]}};
    }
    Vec3 column(int c) const { return {at(0, c), at(1, c), at(2, c)}; }
    Vec3 row(int r) const { return {at(r, 0), at(r, 1), at(r, 2)}; }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c) + a.at(r, 2) * b.at(2, c);
    return out;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 out;
    for (int r = 0; r < 3; ++r)
        out[r] = a.at(r, 0) * v[0] + a.at(r, 1) * v[1] + a.at(r, 2) * v[2];
    return out;
}

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (size_t i = 0; i < 9; ++i) out.e[i] = a.e[i] + b.e[i];
    return out;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (size_t i = 0; i < 9; ++i) out.e[i] = a.e[i] - b.e[i];
    return out;
}

inline Mat3 operator*(const FieldElem& c, const Mat3& a) {
    Mat3 out;
    for (size_t i = 0; i < 9; ++i) out.e[i] = c * a.e[i];
    return out;
}

inline bool operator==(const Mat3& a, const Mat3& b) {
    for (size_t i = 0; i < 9; ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

inline bool is_zero(const Mat3& a) {
    for (const FieldElem& x : a.e)
        if (!x.is_zero()) return false;
    return true;
}

inline bool is_zero(const Vec3& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.at(r, c) = a.at(c, r);
    return out;
}

inline FieldElem det(const Mat3& a) {
    return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
           a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
           a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

// adj(M) with M * adj(M) = det(M) * I.
inline Mat3 adjugate(const Mat3& a) {
    Mat3 out;
    out.at(0, 0) = a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1);
    out.at(0, 1) = a.at(0, 2) * a.at(2, 1) - a.at(0, 1) * a.at(2, 2);
    out.at(0, 2) = a.at(0, 1) * a.at(1, 2) - a.at(0, 2) * a.at(1, 1);
    out.at(1, 0) = a.at(1, 2) * a.at(2, 0) - a.at(1, 0) * a.at(2, 2);
    out.at(1, 1) = a.at(0, 0) * a.at(2, 2) - a.at(0, 2) * a.at(2, 0);
    out.at(1, 2) = a.at(0, 2) * a.at(1, 0) - a.at(0, 0) * a.at(1, 2);
    out.at(2, 0) = a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0);
    out.at(2, 1) = a.at(0, 1) * a.at(2, 0) - a.at(0, 0) * a.at(2, 1);
    out.at(2, 2) = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    return out;
}

inline Mat3 inverse(const Mat3& a) {
    FieldElem d = det(a);
    if (d.is_zero()) fail(ErrorCode::division_by_zero, "matrix is singular");
    return inv(d) * adjugate(a);
}

inline FieldElem dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

// Projective equality: both nonzero and all 2x2 minors vanish.
inline bool proportional(const Vec3& a, const Vec3& b) {
    if (is_zero(a) || is_zero(b)) return false;
    return is_zero(cross(a, b));
}

inline bool proportional(const Mat3& a, const Mat3& b) {
    if (is_zero(a) || is_zero(b)) return false;
    size_t k = 0;
    while (a.e[k].is_zero()) ++k;
    if (b.e[k].is_zero()) return false;
    for (size_t i = 0; i < 9; ++i)
        if (a.e[k] * b.e[i] != b.e[k] * a.e[i]) return false;
    return true;
}

inline void reduce_content(Vec3& v) { divide_content(v); }
inline void reduce_content(Mat3& m) { divide_content(m.e); }

} // namespace feuerbach
