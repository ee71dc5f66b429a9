#pragma once
// Cevian configurations: the traces of a point on the sidelines, their
// reflections in the side midpoints, and the two affine maps carrying the
// reference triangle onto those triples.

#include <array>
#include <cassert>
#include <utility>

#include "affinemap.hpp"
#include "barycentric.hpp"
#include "conics.hpp"
#include "errors.hpp"

namespace feuerbach {

// A point admits a cevian map pair when it avoids the sidelines and the
// three lines x + y = 0, y + z = 0, z + x = 0 on which the maps collapse.
inline void require_admissible(const BaryPoint& P) {
    if (P.x.is_zero() || P.y.is_zero() || P.z.is_zero())
        fail(ErrorCode::inadmissible_point, "point lies on a sideline");
    if ((P.x + P.y).is_zero() || (P.y + P.z).is_zero() || (P.z + P.x).is_zero())
        fail(ErrorCode::inadmissible_point, "a coordinate pair sum vanishes");
}

// The two map matrices of an admissible point, unreduced. Writing
// x' = x(y+z), y' = y(z+x), z' = z(x+y), the first map sends the vertices
// to the traces, the second to the reflected traces, and their sum is
// (x+y)(y+z)(z+x) times the complement matrix.
inline std::pair<Mat3, Mat3> cevian_matrices(const BaryPoint& P) {
    const FieldElem &x = P.x, &y = P.y, &z = P.z;
    FieldElem xp = x * (y + z), yp = y * (z + x), zp = z * (x + y);
    FieldElem xy = x + y, yz = y + z, zx = z + x;
    Mat3 t1{{0, xp * xy, xp * zx,
             yp * xy, 0, yp * yz,
             zp * zx, zp * yz, 0}};
    Mat3 t2{{0, zp * yz, yp * yz,
             zp * zx, 0, xp * zx,
             yp * xy, xp * xy, 0}};
    return {std::move(t1), std::move(t2)};
}

struct CevianConfig {
    TrianglePtr ctx;
    BaryPoint P;
    std::array<BaryPoint, 3> trace;      // D, E, F on BC, CA, AB
    std::array<BaryPoint, 3> reflected;  // D', E', F'
    std::array<BaryPoint, 3> mid;        // side midpoints D0, E0, F0
    AffineMap T1, T2;
};

inline CevianConfig build_cevian_config(const TrianglePtr& ctx, const BaryPoint& P_in) {
    BaryPoint P = reduced(P_in);
    require_admissible(P);
    const FieldElem &x = P.x, &y = P.y, &z = P.z;

    CevianConfig cfg;
    cfg.ctx = ctx;
    cfg.P = P;
    cfg.trace = {BaryPoint(FieldElem(0), y, z), BaryPoint(x, FieldElem(0), z),
                 BaryPoint(x, y, FieldElem(0))};
    cfg.reflected = {BaryPoint(FieldElem(0), z, y), BaryPoint(z, FieldElem(0), x),
                     BaryPoint(y, x, FieldElem(0))};
    cfg.mid = {BaryPoint(0, 1, 1), BaryPoint(1, 0, 1), BaryPoint(1, 1, 0)};

    auto [t1, t2] = cevian_matrices(P);
    cfg.T1 = make_affine_map(ctx, t1);
    cfg.T2 = make_affine_map(ctx, t2);

#ifndef NDEBUG
    for (size_t i = 0; i < 3; ++i) {
        assert(proj_eq(apply(cfg.T1, vertex_point(static_cast<int>(i))), cfg.trace[i]));
        assert(proj_eq(apply(cfg.T2, vertex_point(static_cast<int>(i))), cfg.reflected[i]));
        assert(proj_eq(reflect_in(cfg.trace[i], cfg.mid[i]), cfg.reflected[i]));
        assert(on_line(line_through(vertex_point(static_cast<int>(i)), P), cfg.trace[i]));
    }
    // The interpolation solver must reproduce the closed-form matrices.
    std::array<BaryPoint, 3> vs = {vertex_point(0), vertex_point(1), vertex_point(2)};
    assert(proportional(map_from_triangles(ctx, vs, cfg.trace).m, cfg.T1.m));
    assert(proportional(map_from_triangles(ctx, vs, cfg.reflected).m, cfg.T2.m));
#endif
    return cfg;
}

inline BaryPoint isotomic_conjugate(const BaryPoint& p) {
    if (p.x.is_zero() || p.y.is_zero() || p.z.is_zero())
        fail(ErrorCode::on_sideline, "isotomic conjugate undefined on the sidelines");
    return reduced(BaryPoint(p.y * p.z, p.x * p.z, p.x * p.y));
}

namespace detail {

// Common point of the cevians through three given traces, one per sideline.
// The third incidence is a consistency requirement, not an input.
inline BaryPoint cevian_meet(const TriangleCtx& ctx, const std::array<CartPoint, 3>& feet) {
    BaryPoint d = from_cartesian(ctx, feet[0]);
    BaryPoint e = from_cartesian(ctx, feet[1]);
    BaryPoint f = from_cartesian(ctx, feet[2]);
    BaryPoint p = meet(line_through(vertex_point(0), d), line_through(vertex_point(1), e));
    assert(on_line(line_through(vertex_point(2), f), p));
    (void)f;
    return p;
}

} // namespace detail

// Point of concurrence of the cevians through the incircle touch points.
inline BaryPoint gergonne_point(const TriangleMetrics& m) {
    BaryPoint p = detail::cevian_meet(*m.ctx, m.touch_in);
    // Closed form: cleared reciprocals of the touch distances.
    assert(proj_eq(p, BaryPoint((m.s - m.b) * (m.s - m.c), (m.s - m.a) * (m.s - m.c),
                                (m.s - m.a) * (m.s - m.b))));
    return p;
}

// Point of concurrence of the cevians through the touch points of one
// excircle (0 = opposite A, 1 = opposite B, 2 = opposite C).
inline BaryPoint external_gergonne_point(const TriangleMetrics& m, int vertex) {
    assert(vertex >= 0 && vertex < 3);
    return detail::cevian_meet(*m.ctx, m.touch_ex[static_cast<size_t>(vertex)]);
}

} // namespace feuerbach
