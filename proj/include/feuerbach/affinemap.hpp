#pragma once
// Affine maps of the triangle plane in barycentric matrix form.
//
// A map is a 3x3 matrix acting on homogeneous triples, constrained to fix
// the line at infinity: every column sums to the same nonzero mu. Working
// projectively keeps matrices integral; mu carries the scale that a
// cartesian description would divide out.

#include <optional>
#include <utility>
#include <vector>

#include "barycentric.hpp"
#include "errors.hpp"
#include "mat3.hpp"

namespace feuerbach {

struct AffineMap {
    TrianglePtr ctx;
    Mat3 m;        // content-reduced
    FieldElem mu;  // common column sum, nonzero
};

enum class MapKind { identity, translation, homothety, general };

struct MapClass {
    MapKind kind = MapKind::general;
    std::optional<BaryPoint> center;      // homothety only
    std::optional<FieldElem> ratio;       // homothety: signed; identity: 1
    std::optional<BaryPoint> direction;   // translation: ideal point of the shift
    std::optional<FieldElem> length_sq;   // translation: squared shift length
};

inline AffineMap make_affine_map(TrianglePtr ctx, Mat3 m) {
    reduce_content(m);
    Vec3 sums = {m.at(0, 0) + m.at(1, 0) + m.at(2, 0),
                 m.at(0, 1) + m.at(1, 1) + m.at(2, 1),
                 m.at(0, 2) + m.at(1, 2) + m.at(2, 2)};
    assert(sums[0] == sums[1] && sums[1] == sums[2]);
    if (sums[0].is_zero() || det(m).is_zero())
        fail(ErrorCode::collinear_triple, "matrix does not define an invertible affine map");
    return AffineMap{std::move(ctx), std::move(m), std::move(sums[0])};
}

inline BaryPoint apply(const AffineMap& f, const BaryPoint& p) {
    return reduced(BaryPoint(f.m * p.vec()));
}

// Unique affine map sending the source triple to the destination triple,
// both read as ordinary non-collinear points.
inline AffineMap map_from_triangles(const TrianglePtr& ctx,
                                    const std::array<BaryPoint, 3>& src,
                                    const std::array<BaryPoint, 3>& dst) {
    auto unit_weight = [](const BaryPoint& p) {
        FieldElem w = p.weight();
        if (w.is_zero()) fail(ErrorCode::ideal_point, "triangle corner at infinity");
        FieldElem iw = inv(w);
        return Vec3{p.x * iw, p.y * iw, p.z * iw};
    };
    Mat3 S = Mat3::from_columns(unit_weight(src[0]), unit_weight(src[1]), unit_weight(src[2]));
    Mat3 D = Mat3::from_columns(unit_weight(dst[0]), unit_weight(dst[1]), unit_weight(dst[2]));
    FieldElem ds = det(S);
    if (ds.is_zero()) fail(ErrorCode::collinear_triple, "source triple is collinear");
    if (det(D).is_zero()) fail(ErrorCode::collinear_triple, "destination triple is collinear");
    return make_affine_map(ctx, D * (inv(ds) * adjugate(S)));
}

// X to the midpoint of X and its antipode over the centroid: vertices go to
// the opposite side midpoints.
inline AffineMap complement_map(TrianglePtr ctx) {
    return make_affine_map(std::move(ctx), Mat3{{0, 1, 1, 1, 0, 1, 1, 1, 0}});
}

inline AffineMap anticomplement_map(TrianglePtr ctx) {
    return make_affine_map(std::move(ctx), Mat3{{-1, 1, 1, 1, -1, 1, 1, 1, -1}});
}

// compose(f, g) applies g first, then f.
inline AffineMap compose(const AffineMap& f, const AffineMap& g) {
    if (f.ctx.get() != g.ctx.get())
        fail(ErrorCode::ctx_mismatch, "composed maps reference different triangles");
    return make_affine_map(f.ctx, f.m * g.m);
}

inline AffineMap inverse_map(const AffineMap& f) {
    return make_affine_map(f.ctx, adjugate(f.m));
}

// True when f composed with the inverse of g is a translation or the
// identity: the two maps then act identically on ideal directions and
// carry the same column-sum scale. Avoids forming the inverse.
inline bool differ_by_translation(const AffineMap& f, const AffineMap& g) {
    if (f.ctx.get() != g.ctx.get())
        fail(ErrorCode::ctx_mismatch, "compared maps reference different triangles");
    std::optional<FieldElem> lambda;
    for (const Vec3& v : {Vec3{FieldElem(1), FieldElem(-1), FieldElem(0)},
                          Vec3{FieldElem(0), FieldElem(1), FieldElem(-1)}}) {
        const Vec3 a = f.m * v, b = g.m * v;
        if (!lambda) {
            size_t j = !b[0].is_zero() ? 0 : (!b[1].is_zero() ? 1 : 2);
            if (b[j].is_zero()) return false;
            lambda = a[j] / b[j];
        }
        for (size_t i = 0; i < 3; ++i)
            if (!(a[i] == *lambda * b[i])) return false;
    }
    return f.mu == *lambda * g.mu;
}

// Determinant of the cartesian action: scale-invariant, equal to the
// squared ratio for a homothety.
inline FieldElem det_ratio(const AffineMap& f) {
    return det(f.m) / (f.mu * f.mu * f.mu);
}

namespace detail {

// Cartesian conjugate convA * m * convAinv. Its bottom row is (0, 0, mu);
// the upper-left block is the linear part scaled by mu and the upper-right
// column the translation part scaled by mu.
inline Mat3 cartesian_form(const AffineMap& f) {
    Mat3 a = f.ctx->convA * f.m * f.ctx->convAinv;
    assert(a.at(2, 0).is_zero() && a.at(2, 1).is_zero() && a.at(2, 2) == f.mu);
    return a;
}

} // namespace detail

inline MapClass classify(const AffineMap& f) {
    Mat3 a = detail::cartesian_form(f);
    const FieldElem& mu = f.mu;
    MapClass out;

    const bool scalar_linear_part =
        a.at(0, 1).is_zero() && a.at(1, 0).is_zero() && a.at(0, 0) == a.at(1, 1);
    if (!scalar_linear_part) {
        out.kind = MapKind::general;
        return out;
    }

    if (a.at(0, 0) == mu) {
        FieldElem du = a.at(0, 2) / mu, dv = a.at(1, 2) / mu;
        if (du.is_zero() && dv.is_zero()) {
            out.kind = MapKind::identity;
            out.ratio = FieldElem(1);
            return out;
        }
        out.kind = MapKind::translation;
        out.direction = reduced(BaryPoint(f.ctx->convAinv * Vec3{du, dv, 0}));
        out.length_sq = du * du + dv * dv;
        return out;
    }

    out.kind = MapKind::homothety;
    out.ratio = a.at(0, 0) / mu;
    FieldElem denom = inv(mu - a.at(0, 0));
    CartPoint center{a.at(0, 2) * denom, a.at(1, 2) * denom};
    out.center = from_cartesian(*f.ctx, center);
    return out;
}

// Ordinary fixed points: empty for a translation, one point for a
// homothety or a generic map, two spanning points when a whole line is
// fixed, the three vertices for the identity.
inline std::vector<BaryPoint> fixed_points(const AffineMap& f) {
    Mat3 a = detail::cartesian_form(f);
    const FieldElem& mu = f.mu;
    // Solve (L - mu I) X = -t in cartesian coordinates.
    FieldElem p = a.at(0, 0) - mu, q = a.at(0, 1), e0 = a.at(0, 2);
    FieldElem r = a.at(1, 0), s = a.at(1, 1) - mu, e1 = a.at(1, 2);
    FieldElem d2 = p * s - q * r;

    auto bary = [&](FieldElem u, FieldElem v) {
        return from_cartesian(*f.ctx, CartPoint{std::move(u), std::move(v)});
    };

    if (!d2.is_zero()) {
        FieldElem id2 = inv(d2);
        return {bary((q * e1 - s * e0) * id2, (r * e0 - p * e1) * id2)};
    }

    const bool linear_zero = p.is_zero() && q.is_zero() && r.is_zero() && s.is_zero();
    if (linear_zero) {
        if (e0.is_zero() && e1.is_zero())
            return {vertex_point(0), vertex_point(1), vertex_point(2)};
        return {};
    }

    // Rank one: consistent exactly when the 2x3 system has rank one too.
    if (!(p * e1 == r * e0 && q * e1 == s * e0)) return {};
    if (!p.is_zero() || !q.is_zero()) {
        if (!p.is_zero())
            return {bary(-e0 / p, 0), bary(-(e0 + q) / p, 1)};
        return {bary(0, -e0 / q), bary(1, -e0 / q)};
    }
    if (!r.is_zero())
        return {bary(-e1 / r, 0), bary(-(e1 + s) / r, 1)};
    return {bary(0, -e1 / s), bary(1, -e1 / s)};
}

} // namespace feuerbach
