#pragma once
// Homogeneous barycentric coordinates over a fixed reference triangle.
//
// A BaryPoint (x : y : z) is an equivalence class up to nonzero scale;
// points with x + y + z = 0 are ideal. The TriangleCtx carries the exact
// change-of-coordinates matrix between barycentric triples and cartesian
// points, so both views stay available without any rounding.

#include <memory>
#include <utility>

#include "errors.hpp"
#include "mat3.hpp"
#include "tower.hpp"

namespace feuerbach {

struct CartPoint {
    FieldElem u, v;
};

inline bool operator==(const CartPoint& a, const CartPoint& b) {
    return a.u == b.u && a.v == b.v;
}

struct BaryPoint {
    FieldElem x, y, z;

    BaryPoint() = default;
    BaryPoint(FieldElem x_in, FieldElem y_in, FieldElem z_in)
        : x(std::move(x_in)), y(std::move(y_in)), z(std::move(z_in)) {}
    explicit BaryPoint(Vec3 v) : x(std::move(v[0])), y(std::move(v[1])), z(std::move(v[2])) {}

    Vec3 vec() const { return {x, y, z}; }
    FieldElem weight() const { return x + y + z; }
};

// Line with equation l*x + m*y + n*z = 0.
struct BaryLine {
    FieldElem l, m, n;

    BaryLine() = default;
    BaryLine(FieldElem l_in, FieldElem m_in, FieldElem n_in)
        : l(std::move(l_in)), m(std::move(m_in)), n(std::move(n_in)) {}
    explicit BaryLine(Vec3 v) : l(std::move(v[0])), m(std::move(v[1])), n(std::move(v[2])) {}

    Vec3 vec() const { return {l, m, n}; }
};

inline bool is_ideal(const BaryPoint& p) { return p.weight().is_zero(); }

inline bool proj_eq(const BaryPoint& a, const BaryPoint& b) {
    return proportional(a.vec(), b.vec());
}

inline bool proj_eq(const BaryLine& a, const BaryLine& b) {
    return proportional(a.vec(), b.vec());
}

inline bool on_line(const BaryLine& l, const BaryPoint& p) {
    return dot(l.vec(), p.vec()).is_zero();
}

// Divides out the positive rational content; the projective class is
// unchanged, coefficients become coprime integers.
inline BaryPoint reduced(const BaryPoint& p) {
    Vec3 v = p.vec();
    reduce_content(v);
    return BaryPoint(std::move(v));
}

inline BaryLine reduced(const BaryLine& l) {
    Vec3 v = l.vec();
    reduce_content(v);
    return BaryLine(std::move(v));
}

struct TriangleCtx {
    CartPoint A, B, C;
    Mat3 convA;     // columns (A.u, A.v, 1), (B.u, B.v, 1), (C.u, C.v, 1)
    Mat3 convAinv;  // exact inverse of convA
    TowerPtr tower;
};

using TrianglePtr = std::shared_ptr<const TriangleCtx>;

inline TrianglePtr make_triangle(const CartPoint& A, const CartPoint& B, const CartPoint& C) {
    FieldElem probe = A.u + A.v + B.u + B.v + C.u + C.v;  // forces a common tower
    const TowerPtr& tw = probe.ctx();
    auto lifted = [&](const CartPoint& p) { return CartPoint{lift(p.u, tw), lift(p.v, tw)}; };

    TriangleCtx ctx;
    ctx.A = lifted(A);
    ctx.B = lifted(B);
    ctx.C = lifted(C);
    ctx.tower = tw;
    ctx.convA = Mat3::from_columns({ctx.A.u, ctx.A.v, 1}, {ctx.B.u, ctx.B.v, 1}, {ctx.C.u, ctx.C.v, 1});
    FieldElem d = det(ctx.convA);
    if (d.is_zero()) fail(ErrorCode::degenerate_triangle, "collinear vertices");
    ctx.convAinv = inv(d) * adjugate(ctx.convA);
    return std::make_shared<const TriangleCtx>(std::move(ctx));
}

inline CartPoint to_cartesian(const TriangleCtx& ctx, const BaryPoint& p) {
    FieldElem s = p.weight();
    if (s.is_zero()) fail(ErrorCode::ideal_point, "ideal point has no cartesian image");
    Vec3 img = ctx.convA * p.vec();
    return {img[0] / s, img[1] / s};
}

inline BaryPoint from_cartesian(const TriangleCtx& ctx, const CartPoint& c) {
    return reduced(BaryPoint(ctx.convAinv * Vec3{c.u, c.v, 1}));
}

inline BaryLine line_through(const BaryPoint& p, const BaryPoint& q) {
    if (proj_eq(p, q)) fail(ErrorCode::identical_arguments, "line through a single point");
    return reduced(BaryLine(cross(p.vec(), q.vec())));
}

inline BaryPoint meet(const BaryLine& a, const BaryLine& b) {
    if (proj_eq(a, b)) fail(ErrorCode::identical_arguments, "meet of a line with itself");
    return reduced(BaryPoint(cross(a.vec(), b.vec())));
}

// Midpoint of two ordinary points: s_q p + s_p q, which normalizes to the
// average of the affine representatives.
inline BaryPoint midpoint(const BaryPoint& p, const BaryPoint& q) {
    FieldElem sp = p.weight(), sq = q.weight();
    if (sp.is_zero() || sq.is_zero())
        fail(ErrorCode::ideal_point, "midpoint needs ordinary points");
    Vec3 pv = p.vec(), qv = q.vec(), out;
    for (size_t i = 0; i < 3; ++i) out[i] = sq * pv[i] + sp * qv[i];
    reduce_content(out);
    return BaryPoint(std::move(out));
}

// Reflection of p in the point m: the image lies on the line through both
// with m as midpoint.
inline BaryPoint reflect_in(const BaryPoint& p, const BaryPoint& m) {
    FieldElem sp = p.weight(), sm = m.weight();
    if (sp.is_zero() || sm.is_zero())
        fail(ErrorCode::ideal_point, "reflection needs ordinary points");
    Vec3 pv = p.vec(), mv = m.vec(), out;
    for (size_t i = 0; i < 3; ++i) out[i] = 2 * sp * mv[i] - sm * pv[i];
    reduce_content(out);
    return BaryPoint(std::move(out));
}

inline BaryPoint vertex_point(int i) {
    return BaryPoint(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
}

inline const BaryLine& line_at_infinity() {
    static const BaryLine l(1, 1, 1);
    return l;
}

// Squared euclidean distance between two ordinary points.
inline FieldElem dist_sq(const CartPoint& p, const CartPoint& q) {
    FieldElem du = p.u - q.u, dv = p.v - q.v;
    return du * du + dv * dv;
}

inline FieldElem dist_sq(const TriangleCtx& ctx, const BaryPoint& p, const BaryPoint& q) {
    return dist_sq(to_cartesian(ctx, p), to_cartesian(ctx, q));
}

} // namespace feuerbach
