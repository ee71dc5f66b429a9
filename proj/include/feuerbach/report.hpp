#pragma once
// JSON reports over the certificate types. Key order is fixed so identical
// input produces byte-identical output.

#include <nlohmann/json.hpp>

#include <string>

#include "certify.hpp"
#include "text.hpp"

namespace feuerbach {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json value_json(const FieldElem& x, int digits) {
    return Json{{"exact", render(x)}, {"approx", approx(x, digits)}};
}

inline Json cart_json(const CartPoint& p, int digits) {
    return Json{{"u", value_json(p.u, digits)}, {"v", value_json(p.v, digits)}};
}

inline Json bary_json(const BaryPoint& p, int digits) {
    BaryPoint r = reduced(p);
    return Json::array({value_json(r.x, digits), value_json(r.y, digits),
                        value_json(r.z, digits)});
}

inline Json point_json(const TriangleCtx& ctx, const BaryPoint& p, int digits) {
    Json out;
    out["barycentric"] = bary_json(p, digits);
    out["cartesian"] = cart_json(to_cartesian(ctx, p), digits);
    return out;
}

inline Json matrix_json(const Mat3& m, int digits) {
    Json rows = Json::array();
    for (size_t i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < 3; ++j) row.push_back(value_json(m.at(i, j), digits));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json map_json(const AffineMap& f, int digits) {
    Json out;
    out["matrix"] = matrix_json(f.m, digits);
    out["column_sum"] = value_json(f.mu, digits);
    out["det_ratio"] = value_json(det_ratio(f), digits);
    return out;
}

inline const char* kind_name(MapKind k) {
    switch (k) {
        case MapKind::identity: return "identity";
        case MapKind::translation: return "translation";
        case MapKind::homothety: return "homothety";
        case MapKind::general: return "general";
    }
    return "";
}

inline Json classification_json(const TriangleCtx& ctx, const MapClass& cls, int digits) {
    Json out;
    out["kind"] = kind_name(cls.kind);
    if (cls.ratio) out["ratio"] = value_json(*cls.ratio, digits);
    if (cls.center) out["center"] = point_json(ctx, *cls.center, digits);
    if (cls.direction) out["direction"] = bary_json(*cls.direction, digits);
    if (cls.length_sq) out["shift_length_sq"] = value_json(*cls.length_sq, digits);
    return out;
}

inline Json triangle_json(const TriangleCtx& ctx, int digits) {
    Json out;
    out["A"] = cart_json(ctx.A, digits);
    out["B"] = cart_json(ctx.B, digits);
    out["C"] = cart_json(ctx.C, digits);
    return out;
}

inline Json metrics_json(const TriangleMetrics& m, int digits) {
    const TriangleCtx& ctx = *m.ctx;
    Json out;
    out["sides"] = Json{{"a", value_json(m.a, digits)},
                        {"b", value_json(m.b, digits)},
                        {"c", value_json(m.c, digits)}};
    out["semiperimeter"] = value_json(m.s, digits);
    out["area"] = value_json(m.area, digits);
    out["radii"] = Json{{"incircle", value_json(m.r_in, digits)},
                        {"circumcircle", value_json(m.R, digits)},
                        {"ninepoint", value_json(m.r_nine, digits)},
                        {"excircleA", value_json(m.r_ex[0], digits)},
                        {"excircleB", value_json(m.r_ex[1], digits)},
                        {"excircleC", value_json(m.r_ex[2], digits)}};
    Json centers;
    centers["centroid"] = point_json(ctx, m.centroid, digits);
    centers["incenter"] = point_json(ctx, m.incenter, digits);
    centers["circumcenter"] = point_json(ctx, m.circumcenter, digits);
    centers["orthocenter"] = point_json(ctx, m.orthocenter, digits);
    centers["ninepoint_center"] = point_json(ctx, m.ninepoint_center, digits);
    centers["excenterA"] = point_json(ctx, m.excenter[0], digits);
    centers["excenterB"] = point_json(ctx, m.excenter[1], digits);
    centers["excenterC"] = point_json(ctx, m.excenter[2], digits);
    out["centers"] = centers;
    return out;
}

inline Json circle_record_json(const TriangleCtx& ctx, const CircleRecord& rec, int digits) {
    Json out;
    out["target"] = target_name(rec.target);
    out["cevian_point"] = point_json(ctx, rec.P, digits);
    out["map"] = map_json(rec.phi, digits);
    out["classification"] = classification_json(ctx, rec.classification, digits);
    out["tangency_point"] = point_json(ctx, rec.Z, digits);
    out["checks"] = Json{{"is_homothety", rec.is_homothety},
                         {"fixed_point_agrees", rec.fixed_point_agrees},
                         {"sides_formula_agrees", rec.sides_formula_agrees},
                         {"maps_ninepoint_to_target", rec.maps_ninepoint_to_target},
                         {"center_maps_to_center", rec.center_maps_to_center},
                         {"ratio_squared_is_det_ratio", rec.ratio_squared_is_det_ratio},
                         {"radius_ratio_matches", rec.radius_ratio_matches},
                         {"distance_identity", rec.distance_identity},
                         {"tangency", rec.tangency.ok()},
                         {"touch_feet_match", rec.touch_feet_match},
                         {"source_centers_map", rec.source_centers_map},
                         {"auxiliary_is_center", rec.auxiliary_is_center},
                         {"midpoint_incidences", rec.midpoint_incidences},
                         {"matrix_sum_identity", rec.matrix_sum_identity},
                         {"commutator_is_translation", rec.commutator_is_translation},
                         {"midconic_contains", rec.midconic_contains}};
    out["ok"] = rec.ok;
    return out;
}

} // namespace detail

inline Json certify_report(const FeuerbachCertificate& cert, int digits) {
    const TriangleCtx& ctx = *cert.triangle;
    Json out;
    out["schema"] = 1;
    out["mode"] = "certify";
    out["digits"] = digits;
    out["triangle"] = detail::triangle_json(ctx, digits);
    out["metrics"] = detail::metrics_json(cert.metrics, digits);
    Json circles = Json::array();
    for (const CircleRecord& rec : cert.records)
        circles.push_back(detail::circle_record_json(ctx, rec, digits));
    out["circles"] = circles;
    out["checks"] = Json{{"euler_identity", cert.euler_identity},
                         {"anticomplement_of_center", cert.anticomplement_of_center},
                         {"ninepoint_is_medial_image", cert.ninepoint_is_medial_image}};
    out["all_exact"] = cert.all_exact;
    return out;
}

inline Json centers_report(const TriangleMetrics& m, int digits) {
    const TriangleCtx& ctx = *m.ctx;
    Json out;
    out["schema"] = 1;
    out["mode"] = "centers";
    out["digits"] = digits;
    out["triangle"] = detail::triangle_json(ctx, digits);
    out["metrics"] = detail::metrics_json(m, digits);
    Json pts;
    pts["gergonne"] = detail::point_json(ctx, gergonne_point(m), digits);
    pts["feuerbach"] = detail::point_json(ctx, feuerbach_point_from_sides(m), digits);
    for (int i = 0; i < 3; ++i) {
        std::string key = std::string("gergonne_") +
                          target_name(static_cast<TargetCircle>(i + 1));
        pts[key] = detail::point_json(ctx, external_gergonne_point(m, i), digits);
    }
    out["points"] = pts;
    return out;
}

inline Json map_trace_report(const TrianglePtr& ctx, const BaryPoint& P, int digits) {
    CevianConfig cfg = build_cevian_config(ctx, P);
    AffineMap phi = build_phi(ctx, P);
    Json out;
    out["schema"] = 1;
    out["mode"] = "map-trace";
    out["digits"] = digits;
    out["triangle"] = detail::triangle_json(*ctx, digits);
    out["point"] = detail::point_json(*ctx, cfg.P, digits);
    out["T1"] = detail::map_json(cfg.T1, digits);
    out["T2"] = detail::map_json(cfg.T2, digits);
    out["K"] = detail::map_json(complement_map(ctx), digits);
    out["phi"] = detail::map_json(phi, digits);
    out["phi_classification"] =
        detail::classification_json(*ctx, classify(phi), digits);
    Json traces = Json::array(), reflected = Json::array();
    for (size_t i = 0; i < 3; ++i) {
        traces.push_back(detail::point_json(*ctx, cfg.trace[i], digits));
        reflected.push_back(detail::point_json(*ctx, cfg.reflected[i], digits));
    }
    out["traces"] = traces;
    out["reflected_traces"] = reflected;
    if (!proj_eq(cfg.P, BaryPoint(1, 1, 1)))
        out["fixed_point"] = detail::point_json(*ctx, fixed_point_formula(cfg.P), digits);
    return out;
}

inline Json conic_report(const TriangleMetrics& m, const BaryPoint& P, int digits) {
    Json out;
    out["schema"] = 1;
    out["mode"] = "conic";
    out["digits"] = digits;
    out["triangle"] = detail::triangle_json(*m.ctx, digits);
    auto form = [&](const Conic& c) { return detail::matrix_json(c.q, digits); };
    out["circumcircle"] = form(circumcircle(m));
    out["ninepoint_circle"] = form(ninepoint_circle(m));
    out["incircle"] = form(incircle(m));
    out["excircleA"] = form(excircle(m, 0));
    out["excircleB"] = form(excircle(m, 1));
    out["excircleC"] = form(excircle(m, 2));
    out["midpoint_conic"] = form(ninepoint_conic(m.ctx, P));
    return out;
}

} // namespace feuerbach
