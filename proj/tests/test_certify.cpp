// End-to-end tangency certification: composite maps, fixed points, and the
// full certificate for the nine-point circle against all four circles.

#include <catch2/catch_amalgamated.hpp>

#include "feuerbach/certify.hpp"
#include "helpers.hpp"

using namespace feuerbach;

namespace {

TrianglePtr wide_triangle() {
    return make_triangle({4, 0}, {0, 3}, {-2, 0});
}

TrianglePtr right_triangle() {
    return make_triangle({0, 0}, {4, 0}, {0, 3});
}

FieldElem elem2(const TowerPtr& ctx, Rational a, Rational b) {
    return FieldElem(ctx, {std::move(a), std::move(b)});
}

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error to be thrown");
    return ErrorCode::io_error;
}

} // namespace

TEST_CASE("fixed point closed form") {
    CHECK(proj_eq(fixed_point_formula(BaryPoint(6, 2, 3)), BaryPoint(1, 3, 8)));
    CHECK(proj_eq(fixed_point_formula(BaryPoint(-1, 3, 2)), BaryPoint(-1, 27, 32)));

    SECTION("vanishing set is refused") {
        CHECK(code_of([] { (void)fixed_point_formula(BaryPoint(1, 1, 1)); }) ==
              ErrorCode::centroid_degenerate);
        CHECK(code_of([] { (void)fixed_point_formula(BaryPoint(3, 3, 3)); }) ==
              ErrorCode::centroid_degenerate);
        CHECK(code_of([] { (void)fixed_point_formula(BaryPoint(1, 0, 0)); }) ==
              ErrorCode::centroid_degenerate);
    }

    SECTION("isotomic symmetry") {
        for (const BaryPoint& p : {BaryPoint(1, 2, 3), BaryPoint(6, 2, 3), BaryPoint(-1, 3, 2)})
            CHECK(proj_eq(fixed_point_formula(p),
                          fixed_point_formula(isotomic_conjugate(p))));
    }

    SECTION("defined on sideline points away from the vertices") {
        CHECK(proj_eq(fixed_point_formula(BaryPoint(0, 1, 2)), BaryPoint(0, 2, 1)));
    }
}

TEST_CASE("tangency point from the side lengths") {
    SECTION("right triangle") {
        TriangleMetrics m = compute_metrics(right_triangle());
        BaryPoint z = feuerbach_point_from_sides(m);
        CHECK(z.x == FieldElem(2));
        CHECK(z.y == FieldElem(6));
        CHECK(z.z == FieldElem(16));
        CartPoint zc = to_cartesian(*m.ctx, z);
        CHECK(zc.u == FieldElem(1));
        CHECK(zc.v == FieldElem(2));
    }

    SECTION("irrational tower") {
        TriangleMetrics m = compute_metrics(wide_triangle());
        const TowerPtr& tw = m.tower;
        BaryPoint z = feuerbach_point_from_sides(m);
        CHECK(z.x == elem2(tw, 11, -1));
        CHECK(z.y == elem2(tw, -168, 48));
        CHECK(z.z == elem2(tw, -107, 37));
        CHECK(z.weight() == elem2(tw, -264, 84));
    }

    SECTION("isosceles triangles put the point on the axis cevian") {
        TriangleMetrics m = compute_metrics(make_triangle({2, 3}, {0, 0}, {4, 0}));
        CHECK(m.b == m.c);
        BaryPoint z = feuerbach_point_from_sides(m);
        CHECK(z.x.is_zero());
        CHECK(!z.y.is_zero());
    }
}

TEST_CASE("composite map for the Gergonne point") {
    TrianglePtr t = right_triangle();
    TriangleMetrics m = compute_metrics(t);

    SECTION("centroid gives the identity") {
        MapClass cls = classify(build_phi(t, BaryPoint(1, 1, 1)));
        CHECK(cls.kind == MapKind::identity);
    }

    SECTION("incircle homothety") {
        AffineMap phi = build_phi(t, gergonne_point(m));
        MapClass cls = classify(phi);
        REQUIRE(cls.kind == MapKind::homothety);
        CHECK(*cls.ratio == FieldElem(Rational(4, 5)));
        CHECK(proj_eq(*cls.center, BaryPoint(1, 3, 8)));
        CHECK(det_ratio(phi) == FieldElem(Rational(16, 25)));
    }

    SECTION("excircle homothety") {
        AffineMap phi = build_phi(t, external_gergonne_point(m, 0));
        MapClass cls = classify(phi);
        REQUIRE(cls.kind == MapKind::homothety);
        CHECK(*cls.ratio == FieldElem(Rational(-24, 5)));
        CHECK(proj_eq(*cls.center, BaryPoint(-1, 27, 32)));
        CHECK(det_ratio(phi) == FieldElem(Rational(576, 25)));
    }

    SECTION("inadmissible point") {
        CHECK(code_of([&] { (void)build_phi(t, BaryPoint(1, -1, 2)); }) ==
              ErrorCode::inadmissible_point);
    }
}

TEST_CASE("certificate for the right triangle") {
    FeuerbachCertificate cert = certify(right_triangle());

    CHECK(cert.all_exact);
    CHECK(cert.euler_identity);
    CHECK(cert.anticomplement_of_center);
    CHECK(cert.ninepoint_is_medial_image);

    const CircleRecord& in = cert.records[0];
    CHECK(in.target == TargetCircle::incircle);
    CHECK(in.ok);
    CHECK(proj_eq(in.Z, BaryPoint(1, 3, 8)));
    CHECK(in.Z_cart == CartPoint{FieldElem(1), FieldElem(2)});
    CHECK(*in.classification.ratio == FieldElem(Rational(4, 5)));
    CHECK(in.det_ratio_phi == FieldElem(Rational(16, 25)));
    CHECK(in.tangency.ok());

    // |N - I| = r_nine - r_in = 1/4 exactly.
    CHECK(dist_sq(cert.metrics.ninepoint_cart, cert.metrics.incenter_cart) ==
          FieldElem(Rational(1, 16)));

    const std::array<BaryPoint, 4> zs = {BaryPoint(1, 3, 8), BaryPoint(-1, 27, 32),
                                         BaryPoint(49, -3, 32), BaryPoint(49, 27, -8)};
    const std::array<Rational, 4> ratios = {Rational(4, 5), Rational(-24, 5), Rational(-8, 5),
                                            Rational(-12, 5)};
    const std::array<CartPoint, 4> carts = {
        CartPoint{FieldElem(1), FieldElem(2)},
        CartPoint{FieldElem(Rational(54, 29)), FieldElem(Rational(48, 29))},
        CartPoint{FieldElem(Rational(-2, 13)), FieldElem(Rational(16, 13))},
        CartPoint{FieldElem(Rational(27, 17)), FieldElem(Rational(-6, 17))}};
    for (size_t i = 0; i < 4; ++i) {
        const CircleRecord& rec = cert.records[i];
        CHECK(rec.ok);
        CHECK(rec.is_homothety);
        CHECK(rec.fixed_point_agrees);
        CHECK(rec.sides_formula_agrees);
        CHECK(rec.maps_ninepoint_to_target);
        CHECK(rec.center_maps_to_center);
        CHECK(rec.ratio_squared_is_det_ratio);
        CHECK(rec.radius_ratio_matches);
        CHECK(rec.distance_identity);
        CHECK(rec.touch_feet_match);
        CHECK(rec.source_centers_map);
        CHECK(rec.auxiliary_is_center);
        CHECK(rec.midpoint_incidences);
        CHECK(rec.matrix_sum_identity);
        CHECK(rec.commutator_is_translation);
        CHECK(rec.midconic_contains);
        CHECK(rec.tangency.ok());
        CHECK(proj_eq(rec.Z, zs[i]));
        CHECK(rec.Z_cart == carts[i]);
        CHECK(*rec.classification.ratio == FieldElem(ratios[i]));
    }
}

TEST_CASE("certificate with an irrational tower") {
    TrianglePtr t = wide_triangle();
    FeuerbachCertificate cert = certify(t);
    const TowerPtr& tw = cert.metrics.tower;

    CHECK(cert.all_exact);
    const CircleRecord& in = cert.records[0];
    CHECK(proj_eq(in.Z, feuerbach_point_from_sides(cert.metrics)));
    CHECK(in.Z_cart.u == elem2(tw, Rational(-79, 102), Rational(5, 102)));
    CHECK(in.Z_cart.v == elem2(tw, Rational(56, 51), Rational(-10, 51)));

    FieldElem want = square(cert.metrics.r_in) / square(cert.metrics.r_nine);
    CHECK(in.det_ratio_phi == want);
    for (const CircleRecord& rec : cert.records) CHECK(rec.ok);
}

TEST_CASE("equilateral triangles are refused") {
    auto [q3, r3] = adjoin_sqrt(nullptr, FieldElem(3));
    TrianglePtr t = make_triangle({0, 0}, {1, 0},
                                  {FieldElem(Rational(1, 2)), r3 / 2});
    CHECK(code_of([&] { (void)certify(t); }) == ErrorCode::equilateral_triangle);
}
