#pragma once
// Conics in barycentric form, the classical circles of a triangle, and
// exact tangency certificates.
//
// A Conic is a symmetric 3x3 matrix q up to scale; a point p lies on it
// when p^T q p = 0. Circles are built from cartesian data and converted
// through the triangle's coordinate matrices, so "is this conic a circle"
// and "what are its center and radius" have exact answers.

#include <array>
#include <cassert>
#include <tuple>
#include <utility>

#include "affinemap.hpp"
#include "barycentric.hpp"
#include "errors.hpp"
#include "mat3.hpp"

namespace feuerbach {

struct Conic {
    TrianglePtr ctx;
    Mat3 q;  // symmetric, content-reduced
};

inline FieldElem conic_eval(const Conic& c, const BaryPoint& p) {
    return dot(p.vec(), c.q * p.vec());
}

inline bool on_conic(const Conic& c, const BaryPoint& p) {
    return conic_eval(c, p).is_zero();
}

inline bool proj_eq(const Conic& a, const Conic& b) {
    return proportional(a.q, b.q);
}

// Polar line of p; for p on the conic this is the tangent there.
inline BaryLine polar_line(const Conic& c, const BaryPoint& p) {
    return reduced(BaryLine(c.q * p.vec()));
}

inline BaryLine tangent_line_at(const Conic& c, const BaryPoint& p) {
    if (!on_conic(c, p))
        fail(ErrorCode::point_not_on_conic, "tangent line requested off the conic");
    return polar_line(c, p);
}

// Image of a conic under an affine map: substitute the inverse map, using
// the adjugate as a scale-free inverse.
inline Conic map_conic(const AffineMap& f, const Conic& c) {
    if (f.ctx.get() != c.ctx.get())
        fail(ErrorCode::ctx_mismatch, "map and conic reference different triangles");
    Mat3 a = adjugate(f.m);
    Mat3 q = transpose(a) * c.q * a;
    reduce_content(q);
    return Conic{c.ctx, std::move(q)};
}

// Preimage of a conic under an affine map: substitute the map directly.
// For invertible f, proj_eq(map_conic(f, c1), c2) and
// proj_eq(pullback_conic(f, c2), c1) are the same statement, but the
// pullback needs no adjugate.
inline Conic pullback_conic(const AffineMap& f, const Conic& c) {
    if (f.ctx.get() != c.ctx.get())
        fail(ErrorCode::ctx_mismatch, "map and conic reference different triangles");
    Mat3 q = transpose(f.m) * c.q * f.m;
    reduce_content(q);
    return Conic{c.ctx, std::move(q)};
}

struct TangencyCertificate {
    BaryPoint point;
    bool on_first = false;
    bool on_second = false;
    BaryLine tangent_first, tangent_second;
    bool tangents_coincide = false;

    bool ok() const { return on_first && on_second && tangents_coincide; }
};

// Certifies that two conics touch at p: p lies on both and the tangent
// lines there coincide. All checks are exact; nothing is asserted, the
// result records what holds.
inline TangencyCertificate certify_tangency(const Conic& a, const Conic& b, const BaryPoint& p) {
    TangencyCertificate cert;
    cert.point = p;
    cert.on_first = on_conic(a, p);
    cert.on_second = on_conic(b, p);
    cert.tangent_first = polar_line(a, p);
    cert.tangent_second = polar_line(b, p);
    cert.tangents_coincide = proj_eq(cert.tangent_first, cert.tangent_second);
    return cert;
}

namespace detail {

inline Mat3 cartesian_conic_form(const Conic& c) {
    return transpose(c.ctx->convAinv) * c.q * c.ctx->convAinv;
}

} // namespace detail

// True when the conic is a euclidean circle: in cartesian form the two
// squared terms agree and the cross term vanishes.
inline bool is_circle(const Conic& c) {
    Mat3 f = detail::cartesian_conic_form(c);
    return f.at(0, 1).is_zero() && f.at(0, 0) == f.at(1, 1) && !f.at(0, 0).is_zero();
}

struct CircleData {
    std::array<FieldElem, 6> coeffs;  // u^2, v^2, uv, u, v, 1 with u^2 coefficient 1
    CartPoint center;
    FieldElem radius_sq;
};

inline CircleData circle_data(const Conic& c) {
    Mat3 f = detail::cartesian_conic_form(c);
    assert(f.at(0, 1).is_zero() && f.at(0, 0) == f.at(1, 1) && !f.at(0, 0).is_zero());
    FieldElem n = inv(f.at(0, 0));
    CircleData out;
    out.coeffs = {FieldElem(1),
                  FieldElem(1),
                  FieldElem(0),
                  2 * f.at(0, 2) * n,
                  2 * f.at(1, 2) * n,
                  f.at(2, 2) * n};
    out.center = {out.coeffs[3] / FieldElem(-2), out.coeffs[4] / FieldElem(-2)};
    out.radius_sq = out.center.u * out.center.u + out.center.v * out.center.v - out.coeffs[5];
    return out;
}

inline std::array<FieldElem, 6> cartesian_circle_coeffs(const Conic& c) {
    return circle_data(c).coeffs;
}

// Circle through three cartesian points, returned in barycentric form.
inline Conic circle_through(const TrianglePtr& ctx, const CartPoint& p1, const CartPoint& p2,
                            const CartPoint& p3) {
    Mat3 sys = Mat3::from_columns({p1.u, p2.u, p3.u}, {p1.v, p2.v, p3.v}, {1, 1, 1});
    FieldElem d = det(sys);
    if (d.is_zero()) fail(ErrorCode::collinear_points, "no circle through collinear points");
    Vec3 rhs = {-(p1.u * p1.u + p1.v * p1.v),
                -(p2.u * p2.u + p2.v * p2.v),
                -(p3.u * p3.u + p3.v * p3.v)};
    Vec3 def = adjugate(sys) * rhs;
    FieldElem id = inv(d);
    FieldElem D = def[0] * id, E = def[1] * id, F = def[2] * id;

    Mat3 cart{{2, 0, D, 0, 2, E, D, E, 2 * F}};
    Mat3 q = transpose(ctx->convA) * cart * ctx->convA;
    reduce_content(q);
    return Conic{ctx, std::move(q)};
}

// Foot of the perpendicular from p onto the line through u and v.
inline CartPoint perpendicular_foot(const CartPoint& p, const CartPoint& u, const CartPoint& v) {
    FieldElem du = v.u - u.u, dv = v.v - u.v;
    FieldElem t = ((p.u - u.u) * du + (p.v - u.v) * dv) / (du * du + dv * dv);
    return {u.u + t * du, u.v + t * dv};
}

// Squared distance from p to the line through u and v.
inline FieldElem line_dist_sq(const CartPoint& p, const CartPoint& u, const CartPoint& v) {
    FieldElem du = v.u - u.u, dv = v.v - u.v;
    FieldElem crossed = du * (p.v - u.v) - dv * (p.u - u.u);
    return crossed * crossed / (du * du + dv * dv);
}

// Exact metric data of a triangle. Side lengths live in an extension of
// the vertex tower; every derived quantity is validated against an
// independent identity before this returns.
struct TriangleMetrics {
    TrianglePtr ctx;
    TowerPtr tower;     // vertex tower extended by the side-length radicals
    FieldElem a, b, c;  // |BC|, |CA|, |AB|
    FieldElem s;        // semiperimeter
    FieldElem area;     // positive
    FieldElem r_in;     // inradius
    FieldElem R;        // circumradius
    FieldElem r_nine;   // nine-point radius R/2
    std::array<FieldElem, 3> r_ex;
    BaryPoint centroid, incenter, circumcenter, orthocenter, ninepoint_center;
    std::array<BaryPoint, 3> excenter;
    CartPoint incenter_cart, circumcenter_cart, orthocenter_cart, ninepoint_cart;
    std::array<CartPoint, 3> excenter_cart;
    std::array<CartPoint, 3> touch_in;                 // incircle feet on BC, CA, AB
    std::array<std::array<CartPoint, 3>, 3> touch_ex;  // excircle feet on BC, CA, AB
    bool equilateral = false;
};

inline TriangleMetrics compute_metrics(const TrianglePtr& ctx) {
    TriangleMetrics m;
    m.ctx = ctx;
    const CartPoint &A = ctx->A, &B = ctx->B, &C = ctx->C;

    FieldElem a2 = dist_sq(B, C), b2 = dist_sq(C, A), c2 = dist_sq(A, B);
    TowerPtr tw = ctx->tower;
    std::tie(tw, m.a) = require_sqrt(tw, a2);
    std::tie(tw, m.b) = require_sqrt(tw, lift(b2, tw));
    std::tie(tw, m.c) = require_sqrt(tw, lift(c2, tw));
    m.tower = tw;
    m.equilateral = (a2 == b2 && b2 == c2);

    m.s = (m.a + m.b + m.c) / 2;
    m.area = abs(det(ctx->convA)) / 2;
    // Heron cross-validates the three radical extractions at once.
    assert(16 * m.area * m.area ==
           (m.a + m.b + m.c) * (m.b + m.c - m.a) * (m.a + m.c - m.b) * (m.a + m.b - m.c));

    m.r_in = m.area / m.s;
    m.R = m.a * m.b * m.c / (4 * m.area);
    m.r_nine = m.R / 2;
    m.r_ex = {m.area / (m.s - m.a), m.area / (m.s - m.b), m.area / (m.s - m.c)};

    m.centroid = BaryPoint(1, 1, 1);

    m.incenter = reduced(BaryPoint(m.a, m.b, m.c));
    m.incenter_cart = to_cartesian(*ctx, m.incenter);
    assert(line_dist_sq(m.incenter_cart, B, C) == m.r_in * m.r_in);
    assert(line_dist_sq(m.incenter_cart, C, A) == m.r_in * m.r_in);
    assert(line_dist_sq(m.incenter_cart, A, B) == m.r_in * m.r_in);

    m.excenter = {reduced(BaryPoint(-m.a, m.b, m.c)), reduced(BaryPoint(m.a, -m.b, m.c)),
                  reduced(BaryPoint(m.a, m.b, -m.c))};
    for (int i = 0; i < 3; ++i) {
        m.excenter_cart[static_cast<size_t>(i)] = to_cartesian(*ctx, m.excenter[static_cast<size_t>(i)]);
        const CartPoint& e = m.excenter_cart[static_cast<size_t>(i)];
        const FieldElem r2 = m.r_ex[static_cast<size_t>(i)] * m.r_ex[static_cast<size_t>(i)];
        assert(line_dist_sq(e, B, C) == r2);
        assert(line_dist_sq(e, C, A) == r2);
        assert(line_dist_sq(e, A, B) == r2);
        (void)e;
        (void)r2;
    }

    // Circumcenter from two perpendicular bisector conditions; the radius
    // identity R^2 = (abc)^2 / (16 area^2) certifies the solve.
    {
        FieldElem p = 2 * (B.u - A.u), q = 2 * (B.v - A.v);
        FieldElem r = 2 * (C.u - A.u), s = 2 * (C.v - A.v);
        FieldElem e0 = dist_sq({0, 0}, B) - dist_sq({0, 0}, A);
        FieldElem e1 = dist_sq({0, 0}, C) - dist_sq({0, 0}, A);
        FieldElem idet = inv(p * s - q * r);
        m.circumcenter_cart = {(e0 * s - e1 * q) * idet, (p * e1 - r * e0) * idet};
        assert(dist_sq(m.circumcenter_cart, A) == m.R * m.R);
        assert(dist_sq(m.circumcenter_cart, B) == m.R * m.R);
        m.circumcenter = from_cartesian(*ctx, m.circumcenter_cart);
    }

    // Orthocenter from two altitude conditions; the third is a check.
    {
        FieldElem p = C.u - B.u, q = C.v - B.v;
        FieldElem r = A.u - C.u, s = A.v - C.v;
        FieldElem e0 = p * A.u + q * A.v;
        FieldElem e1 = r * B.u + s * B.v;
        FieldElem idet = inv(p * s - q * r);
        m.orthocenter_cart = {(e0 * s - e1 * q) * idet, (p * e1 - r * e0) * idet};
        assert(((m.orthocenter_cart.u - C.u) * (B.u - A.u) +
                (m.orthocenter_cart.v - C.v) * (B.v - A.v))
                   .is_zero());
        m.orthocenter = from_cartesian(*ctx, m.orthocenter_cart);
    }

    m.ninepoint_cart = {(m.circumcenter_cart.u + m.orthocenter_cart.u) / 2,
                        (m.circumcenter_cart.v + m.orthocenter_cart.v) / 2};
    m.ninepoint_center = from_cartesian(*ctx, m.ninepoint_cart);
    assert(dist_sq(m.ninepoint_cart, CartPoint{(B.u + C.u) / 2, (B.v + C.v) / 2}) ==
           m.r_nine * m.r_nine);

    // Touch points as perpendicular feet, each certified by its tangent
    // lengths: the incircle foot on BC cuts off s-b from B and s-c from C,
    // the excircle opposite A cuts off s-c from B and s-b from C, and the
    // far feet of that excircle sit at distance s from A.
    auto foot_checked = [&](const CartPoint& center, const CartPoint& u, const CartPoint& v,
                            const FieldElem& du, const FieldElem& dv, const FieldElem& radius) {
        CartPoint f = perpendicular_foot(center, u, v);
        assert(dist_sq(f, u) == du * du);
        assert(dist_sq(f, v) == dv * dv);
        assert(dist_sq(f, center) == radius * radius);
        (void)radius;
        (void)du;
        (void)dv;
        return f;
    };

    m.touch_in = {foot_checked(m.incenter_cart, B, C, m.s - m.b, m.s - m.c, m.r_in),
                  foot_checked(m.incenter_cart, C, A, m.s - m.c, m.s - m.a, m.r_in),
                  foot_checked(m.incenter_cart, A, B, m.s - m.a, m.s - m.b, m.r_in)};

    const std::array<FieldElem, 3> cut_a = {m.s, m.s - m.c, m.s - m.b};
    const std::array<FieldElem, 3> cut_b = {m.s - m.c, m.s, m.s - m.a};
    const std::array<FieldElem, 3> cut_c = {m.s - m.b, m.s - m.a, m.s};
    for (int i = 0; i < 3; ++i) {
        const auto& e = m.excenter_cart[static_cast<size_t>(i)];
        const auto& r = m.r_ex[static_cast<size_t>(i)];
        const FieldElem& fa = i == 0 ? cut_a[0] : (i == 1 ? cut_b[0] : cut_c[0]);
        const FieldElem& fb = i == 0 ? cut_a[1] : (i == 1 ? cut_b[1] : cut_c[1]);
        const FieldElem& fc = i == 0 ? cut_a[2] : (i == 1 ? cut_b[2] : cut_c[2]);
        m.touch_ex[static_cast<size_t>(i)] = {foot_checked(e, B, C, fb, fc, r),
                                              foot_checked(e, C, A, fc, fa, r),
                                              foot_checked(e, A, B, fa, fb, r)};
    }

    return m;
}

namespace detail {

inline Conic circle_through_checked(const TrianglePtr& ctx, const CartPoint& p1,
                                    const CartPoint& p2, const CartPoint& p3,
                                    const CartPoint& center, const FieldElem& radius_sq) {
    Conic c = circle_through(ctx, p1, p2, p3);
    CircleData d = circle_data(c);
    assert(d.center == center);
    assert(d.radius_sq == radius_sq);
    (void)center;
    (void)radius_sq;
    return c;
}

} // namespace detail

// Incircle as the circle through the three touch points, validated against
// the incenter and inradius.
inline Conic incircle(const TriangleMetrics& m) {
    return detail::circle_through_checked(m.ctx, m.touch_in[0], m.touch_in[1], m.touch_in[2],
                                          m.incenter_cart, m.r_in * m.r_in);
}

// Excircle opposite the given vertex (0 = A, 1 = B, 2 = C).
inline Conic excircle(const TriangleMetrics& m, int vertex) {
    assert(vertex >= 0 && vertex < 3);
    const auto& f = m.touch_ex[static_cast<size_t>(vertex)];
    const auto& r = m.r_ex[static_cast<size_t>(vertex)];
    return detail::circle_through_checked(m.ctx, f[0], f[1], f[2],
                                          m.excenter_cart[static_cast<size_t>(vertex)], r * r);
}

inline Conic circumcircle(const TriangleMetrics& m) {
    return detail::circle_through_checked(m.ctx, m.ctx->A, m.ctx->B, m.ctx->C,
                                          m.circumcenter_cart, m.R * m.R);
}

// Circle through the side midpoints, validated to carry all nine classical
// points: midpoints, altitude feet, and the midpoints toward the
// orthocenter.
inline Conic ninepoint_circle(const TriangleMetrics& m) {
    const CartPoint &A = m.ctx->A, &B = m.ctx->B, &C = m.ctx->C;
    auto mid = [](const CartPoint& p, const CartPoint& q) {
        return CartPoint{(p.u + q.u) / 2, (p.v + q.v) / 2};
    };
    Conic c = detail::circle_through_checked(m.ctx, mid(B, C), mid(C, A), mid(A, B),
                                             m.ninepoint_cart, m.r_nine * m.r_nine);
#ifndef NDEBUG
    const CartPoint& H = m.orthocenter_cart;
    for (const CartPoint& p :
         {perpendicular_foot(A, B, C), perpendicular_foot(B, C, A), perpendicular_foot(C, A, B),
          mid(H, A), mid(H, B), mid(H, C)})
        assert(on_conic(c, from_cartesian(*m.ctx, p)));
#endif
    return c;
}

// Conic through the three side midpoints and the three reflected traces of
// P; contains the fixed point of the cevian map pair for every admissible P.
inline Conic ninepoint_conic(const TrianglePtr& ctx, const BaryPoint& P) {
    const FieldElem &x = P.x, &y = P.y, &z = P.z;
    if ((x * y * z).is_zero())
        fail(ErrorCode::on_sideline, "ninepoint conic needs a point off the sidelines");
    Mat3 q{{2 * x, -(x + y), -(x + z),
            -(x + y), 2 * y, -(y + z),
            -(x + z), -(y + z), 2 * z}};
    reduce_content(q);
    Conic c{ctx, std::move(q)};
#ifndef NDEBUG
    assert(on_conic(c, BaryPoint(0, 1, 1)) && on_conic(c, BaryPoint(1, 0, 1)) &&
           on_conic(c, BaryPoint(1, 1, 0)));
    assert(on_conic(c, BaryPoint(FieldElem(0), z, y)) &&
           on_conic(c, BaryPoint(z, FieldElem(0), x)) &&
           on_conic(c, BaryPoint(y, x, FieldElem(0))));
#endif
    return c;
}

} // namespace feuerbach
