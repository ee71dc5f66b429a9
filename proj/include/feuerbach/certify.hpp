#pragma once
// Composite maps carrying the nine-point circle onto the incircle and the
// three excircles, their fixed points, and full tangency certificates.
//
// For an admissible point P with cevian maps T1, T2 and the medial map K,
// the composite Phi = T1 * K^-1 * T2 * K^-1 is a homothety. Driving P with
// the touch-point cevian centers makes Phi carry the nine-point circle onto
// the corresponding tangent circle, and its fixed point is the point of
// tangency. Everything here is checked exactly; a certificate records each
// identity as a boolean rather than trusting any single derivation.

#include <array>
#include <cassert>
#include <utility>
#include <vector>

#include "affinemap.hpp"
#include "barycentric.hpp"
#include "cevian.hpp"
#include "conics.hpp"
#include "errors.hpp"

namespace feuerbach {

inline AffineMap build_phi(const TrianglePtr& ctx, const BaryPoint& P) {
    CevianConfig cfg = build_cevian_config(ctx, P);
    AffineMap kinv = anticomplement_map(ctx);
    return compose(cfg.T1, compose(kinv, compose(cfg.T2, kinv)));
}

// Closed form for the fixed point of both partial composites T1*K^-1 and
// T2*K^-1, hence of their product. Vanishes identically only at the
// centroid and at the vertices.
inline BaryPoint fixed_point_formula(const BaryPoint& P_in) {
    BaryPoint P = reduced(P_in);
    const FieldElem &x = P.x, &y = P.y, &z = P.z;
    BaryPoint Z(x * square(y - z), y * square(x - z), z * square(x - y));
    if (Z.x.is_zero() && Z.y.is_zero() && Z.z.is_zero())
        fail(ErrorCode::centroid_degenerate,
             "fixed-point formula vanishes at the centroid and the vertices");

#ifndef NDEBUG
    const bool admissible = !x.is_zero() && !y.is_zero() && !z.is_zero() &&
                            !(x + y).is_zero() && !(y + z).is_zero() && !(z + x).is_zero();
    if (admissible) {
        auto [t1, t2] = cevian_matrices(P);
        Mat3 kinv{{-1, 1, 1, 1, -1, 1, 1, 1, -1}};
        assert(proportional((t1 * kinv) * Z.vec(), Z.vec()));
        assert(proportional((t2 * kinv) * Z.vec(), Z.vec()));
    }
#endif
    return reduced(Z);
}

// Tangency point of the nine-point circle and the incircle, straight from
// the side lengths. Returned unreduced, in the (xi, eta, zeta) shape.
inline BaryPoint feuerbach_point_from_sides(const TriangleMetrics& m) {
    if (m.equilateral)
        fail(ErrorCode::equilateral_triangle,
             "tangency point undefined: the circles coincide");
    const FieldElem &a = m.a, &b = m.b, &c = m.c;
    return BaryPoint(square(b - c) * (b + c - a), square(a - c) * (a + c - b),
                     square(a - b) * (a + b - c));
}

enum class TargetCircle { incircle, excircle_a, excircle_b, excircle_c };

inline const char* target_name(TargetCircle t) {
    switch (t) {
        case TargetCircle::incircle: return "incircle";
        case TargetCircle::excircle_a: return "excircleA";
        case TargetCircle::excircle_b: return "excircleB";
        case TargetCircle::excircle_c: return "excircleC";
    }
    return "";
}

// One certified tangency: the nine-point circle against one target circle.
struct CircleRecord {
    TargetCircle target = TargetCircle::incircle;
    BaryPoint P;              // cevian center driving the maps
    AffineMap phi;
    MapClass classification;
    BaryPoint Z;              // fixed point, content-reduced
    CartPoint Z_cart;
    FieldElem det_ratio_phi;
    TangencyCertificate tangency;

    bool is_homothety = false;
    bool fixed_point_agrees = false;        // formula vs linear-system solve
    bool sides_formula_agrees = false;      // side-length closed form
    bool maps_ninepoint_to_target = false;  // conic image equality
    bool center_maps_to_center = false;     // Phi sends nine-point center to target center
    bool ratio_squared_is_det_ratio = false;
    bool radius_ratio_matches = false;      // det_ratio == (r / r_nine)^2
    bool distance_identity = false;         // |N - center|^2 == (r_nine -+ r)^2
    bool touch_feet_match = false;          // traces are the target's touch points
    bool source_centers_map = false;        // T2 sends the other three centers to A, B, C
    bool auxiliary_is_center = false;       // complement of isotomic(P) is the target center
    bool midpoint_incidences = false;       // vertex-auxiliary lines bisect the trace sides
    bool matrix_sum_identity = false;       // raw T1 + T2 == (x+y)(y+z)(z+x) K
    bool commutator_is_translation = false;
    bool midconic_contains = false;         // midpoints, reflected traces, Z on the midpoint conic

    bool ok = false;
};

struct FeuerbachCertificate {
    TrianglePtr triangle;
    TriangleMetrics metrics;
    std::array<CircleRecord, 4> records;  // incircle, then excircles opposite A, B, C

    bool euler_identity = false;           // |OI|^2 == R(R - 2r) == 4 r_n (r_n - r)
    bool anticomplement_of_center = false; // K^-1 sends the nine-point center to O
    bool ninepoint_is_medial_image = false;
    bool all_exact = false;
};

namespace detail {

struct TargetData {
    TargetCircle id;
    BaryPoint P;
    Conic circle;
    CartPoint center;
    FieldElem radius;
    bool internal;  // tangency sign: true for the incircle
    std::array<CartPoint, 3> feet;
    std::array<BaryPoint, 3> sources;  // what T2 must carry to A, B, C
    BaryPoint Z_sides;
};

inline CircleRecord certify_circle(const TrianglePtr& ctx, const TriangleMetrics& m,
                                   const Conic& nine, const TargetData& t) {
    CircleRecord rec;
    rec.target = t.id;
    rec.P = reduced(t.P);

    CevianConfig cfg = build_cevian_config(ctx, rec.P);
    AffineMap kinv = anticomplement_map(ctx);
    rec.phi = compose(cfg.T1, compose(kinv, compose(cfg.T2, kinv)));
    rec.classification = classify(rec.phi);
    rec.is_homothety = rec.classification.kind == MapKind::homothety;

    rec.Z = fixed_point_formula(rec.P);
    rec.Z_cart = to_cartesian(*ctx, rec.Z);

    std::vector<BaryPoint> fixed = fixed_points(rec.phi);
    rec.fixed_point_agrees = fixed.size() == 1 && proj_eq(fixed[0], rec.Z);
    rec.sides_formula_agrees = proj_eq(rec.Z, t.Z_sides);

    rec.maps_ninepoint_to_target = proj_eq(pullback_conic(rec.phi, t.circle), nine);
    rec.center_maps_to_center =
        proj_eq(apply(rec.phi, m.ninepoint_center), from_cartesian(*ctx, t.center));

    rec.det_ratio_phi = det_ratio(rec.phi);
    if (rec.classification.ratio) {
        const FieldElem& k = *rec.classification.ratio;
        rec.ratio_squared_is_det_ratio = k * k == rec.det_ratio_phi;
    }
    FieldElem rr = t.radius / m.r_nine;
    rec.radius_ratio_matches = rec.det_ratio_phi == rr * rr;

    FieldElem gap = t.internal ? m.r_nine - t.radius : m.r_nine + t.radius;
    rec.distance_identity = dist_sq(m.ninepoint_cart, t.center) == gap * gap;

    rec.tangency = certify_tangency(nine, t.circle, rec.Z);

    rec.touch_feet_match = true;
    for (size_t i = 0; i < 3; ++i)
        rec.touch_feet_match =
            rec.touch_feet_match && to_cartesian(*ctx, cfg.trace[i]) == t.feet[i];

    rec.source_centers_map = true;
    for (int i = 0; i < 3; ++i)
        rec.source_centers_map =
            rec.source_centers_map &&
            proj_eq(apply(cfg.T2, t.sources[static_cast<size_t>(i)]), vertex_point(i));

    BaryPoint aux = apply(complement_map(ctx), isotomic_conjugate(rec.P));
    rec.auxiliary_is_center = proj_eq(aux, from_cartesian(*ctx, t.center));
    rec.midpoint_incidences = true;
    for (int i = 0; i < 3; ++i) {
        size_t j = (static_cast<size_t>(i) + 1) % 3, k = (static_cast<size_t>(i) + 2) % 3;
        rec.midpoint_incidences =
            rec.midpoint_incidences &&
            on_line(line_through(vertex_point(i), aux), midpoint(cfg.trace[j], cfg.trace[k]));
    }

    auto [t1_raw, t2_raw] = cevian_matrices(rec.P);
    FieldElem scale =
        (rec.P.x + rec.P.y) * (rec.P.y + rec.P.z) * (rec.P.z + rec.P.x);
    rec.matrix_sum_identity =
        t1_raw + t2_raw == scale * Mat3{{0, 1, 1, 1, 0, 1, 1, 1, 0}};

    rec.commutator_is_translation =
        differ_by_translation(compose(cfg.T1, cfg.T2), compose(cfg.T2, cfg.T1));

    Conic midconic = ninepoint_conic(ctx, rec.P);
    rec.midconic_contains = on_conic(midconic, rec.Z);
    for (size_t i = 0; i < 3; ++i)
        rec.midconic_contains = rec.midconic_contains && on_conic(midconic, cfg.mid[i]) &&
                                on_conic(midconic, cfg.reflected[i]);

    rec.ok = rec.is_homothety && rec.fixed_point_agrees && rec.sides_formula_agrees &&
             rec.maps_ninepoint_to_target && rec.center_maps_to_center &&
             rec.ratio_squared_is_det_ratio && rec.radius_ratio_matches &&
             rec.distance_identity && rec.tangency.ok() && rec.touch_feet_match &&
             rec.source_centers_map && rec.auxiliary_is_center && rec.midpoint_incidences &&
             rec.matrix_sum_identity && rec.commutator_is_translation && rec.midconic_contains;
    return rec;
}

} // namespace detail

// Certifies tangency of the nine-point circle with the incircle and all
// three excircles. Throws only on the degenerate preconditions; every
// geometric claim is recorded as an exact boolean in the certificate.
inline FeuerbachCertificate certify(const TrianglePtr& ctx) {
    FeuerbachCertificate cert;
    cert.triangle = ctx;
    cert.metrics = compute_metrics(ctx);
    const TriangleMetrics& m = cert.metrics;
    if (m.equilateral)
        fail(ErrorCode::equilateral_triangle,
             "nine-point circle and incircle coincide; tangency is undefined");

    Conic nine = ninepoint_circle(m);
    const FieldElem &a = m.a, &b = m.b, &c = m.c;
    FieldElem sum = a + b + c;

    std::array<detail::TargetData, 4> targets = {
        detail::TargetData{TargetCircle::incircle, gergonne_point(m), incircle(m),
                           m.incenter_cart, m.r_in, true, m.touch_in,
                           {m.excenter[0], m.excenter[1], m.excenter[2]},
                           feuerbach_point_from_sides(m)},
        detail::TargetData{TargetCircle::excircle_a, external_gergonne_point(m, 0),
                           excircle(m, 0), m.excenter_cart[0], m.r_ex[0], false, m.touch_ex[0],
                           {m.incenter, m.excenter[2], m.excenter[1]},
                           BaryPoint(-sum * square(b - c), (a + b - c) * square(c + a),
                                     (a - b + c) * square(a + b))},
        detail::TargetData{TargetCircle::excircle_b, external_gergonne_point(m, 1),
                           excircle(m, 1), m.excenter_cart[1], m.r_ex[1], false, m.touch_ex[1],
                           {m.excenter[2], m.incenter, m.excenter[0]},
                           BaryPoint((a + b - c) * square(b + c), -sum * square(c - a),
                                     (b + c - a) * square(a + b))},
        detail::TargetData{TargetCircle::excircle_c, external_gergonne_point(m, 2),
                           excircle(m, 2), m.excenter_cart[2], m.r_ex[2], false, m.touch_ex[2],
                           {m.excenter[1], m.excenter[0], m.incenter},
                           BaryPoint((a - b + c) * square(b + c), (b + c - a) * square(c + a),
                                     -sum * square(a - b))}};

    for (size_t i = 0; i < 4; ++i)
        cert.records[i] = detail::certify_circle(ctx, m, nine, targets[i]);

    FieldElem oi = dist_sq(m.circumcenter_cart, m.incenter_cart);
    cert.euler_identity = oi == m.R * (m.R - 2 * m.r_in) &&
                          oi == 4 * m.r_nine * (m.r_nine - m.r_in);

    cert.anticomplement_of_center =
        proj_eq(apply(anticomplement_map(ctx), m.ninepoint_center), m.circumcenter);
    cert.ninepoint_is_medial_image =
        proj_eq(pullback_conic(complement_map(ctx), nine), circumcircle(m));

    cert.all_exact = cert.euler_identity && cert.anticomplement_of_center &&
                     cert.ninepoint_is_medial_image;
    for (const CircleRecord& rec : cert.records) cert.all_exact = cert.all_exact && rec.ok;
    return cert;
}

} // namespace feuerbach
