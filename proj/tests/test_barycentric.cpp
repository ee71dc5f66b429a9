// Barycentric coordinates against a reference triangle with known geometry.

#include <catch2/catch_amalgamated.hpp>

#include "feuerbach/barycentric.hpp"
#include "helpers.hpp"

using namespace feuerbach;

namespace {

// Vertices (4,0), (0,3), (-2,0): sides sqrt(13), 6, 5.
TrianglePtr wide_triangle() {
    return make_triangle({4, 0}, {0, 3}, {-2, 0});
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

TEST_CASE("triangle context inverts its coordinate matrix") {
    TrianglePtr t = wide_triangle();
    CHECK(det(t->convA) == FieldElem(18));
    CHECK(t->convA * t->convAinv == Mat3::identity());
    CHECK(t->convAinv * t->convA == Mat3::identity());

    CHECK(code_of([] { (void)make_triangle({0, 0}, {1, 0}, {2, 0}); }) ==
          ErrorCode::degenerate_triangle);
    CHECK(code_of([] { (void)make_triangle({1, 1}, {1, 1}, {0, 2}); }) ==
          ErrorCode::degenerate_triangle);
}

TEST_CASE("cartesian round trips") {
    TrianglePtr t = wide_triangle();

    SECTION("vertices map to the standard basis") {
        CHECK(proj_eq(from_cartesian(*t, t->A), vertex_point(0)));
        CHECK(proj_eq(from_cartesian(*t, t->B), vertex_point(1)));
        CHECK(proj_eq(from_cartesian(*t, t->C), vertex_point(2)));
        CartPoint a = to_cartesian(*t, vertex_point(0));
        CHECK(a == t->A);
    }

    SECTION("centroid") {
        BaryPoint g(1, 1, 1);
        CartPoint gc = to_cartesian(*t, g);
        CHECK(gc.u == FieldElem(Rational(2, 3)));
        CHECK(gc.v == FieldElem(1));
        CHECK(proj_eq(from_cartesian(*t, gc), g));
    }

    SECTION("scaling a representative changes nothing") {
        BaryPoint p(3, -1, 2);
        BaryPoint q(6, -2, 4);
        CHECK(proj_eq(p, q));
        CHECK(to_cartesian(*t, p) == to_cartesian(*t, q));
    }

    SECTION("ideal points have no cartesian image") {
        BaryPoint ideal(1, -1, 0);
        CHECK(is_ideal(ideal));
        CHECK(code_of([&] { (void)to_cartesian(*t, ideal); }) == ErrorCode::ideal_point);
    }
}

TEST_CASE("lines, incidence, and meets") {
    TrianglePtr t = wide_triangle();

    SECTION("sidelines are coordinate planes") {
        BaryLine ab = line_through(vertex_point(0), vertex_point(1));
        CHECK(proj_eq(ab, BaryLine(0, 0, 1)));
        CHECK(on_line(ab, vertex_point(0)));
        CHECK_FALSE(on_line(ab, vertex_point(2)));
    }

    SECTION("medians meet in the centroid") {
        BaryLine ma = line_through(vertex_point(0), BaryPoint(0, 1, 1));
        BaryLine mb = line_through(vertex_point(1), BaryPoint(1, 0, 1));
        BaryPoint g = meet(ma, mb);
        CHECK(proj_eq(g, BaryPoint(1, 1, 1)));
        BaryLine mc = line_through(vertex_point(2), BaryPoint(1, 1, 0));
        CHECK(on_line(mc, g));
    }

    SECTION("parallel lines meet at an ideal point") {
        BaryLine ab(0, 0, 1);
        BaryLine through_c = line_through(vertex_point(2), BaryPoint(1, -1, 1));
        BaryPoint p = meet(ab, through_c);
        CHECK(is_ideal(p));
        CHECK(on_line(line_at_infinity(), p));
    }

    SECTION("degenerate inputs are refused") {
        CHECK(code_of([] { (void)line_through(BaryPoint(1, 2, 3), BaryPoint(2, 4, 6)); }) ==
              ErrorCode::identical_arguments);
        CHECK(code_of([] { (void)meet(BaryLine(1, 0, 0), BaryLine(2, 0, 0)); }) ==
              ErrorCode::identical_arguments);
    }
}

TEST_CASE("midpoints and point reflections") {
    TrianglePtr t = wide_triangle();

    BaryPoint mbc = midpoint(vertex_point(1), vertex_point(2));
    CHECK(proj_eq(mbc, BaryPoint(0, 1, 1)));
    CartPoint mc = to_cartesian(*t, mbc);
    CHECK(mc.u == FieldElem(-1));
    CHECK(mc.v == FieldElem(Rational(3, 2)));

    SECTION("representatives with different weights") {
        BaryPoint m = midpoint(BaryPoint(2, 0, 0), BaryPoint(0, 1, 1));
        CHECK(proj_eq(m, BaryPoint(2, 1, 1)));
    }

    SECTION("reflection through the opposite midpoint") {
        BaryPoint r = reflect_in(vertex_point(0), mbc);
        CHECK(proj_eq(r, BaryPoint(-1, 1, 1)));
        CartPoint rc = to_cartesian(*t, r);
        CHECK(rc.u == FieldElem(-6));
        CHECK(rc.v == FieldElem(3));
        CHECK(proj_eq(reflect_in(r, mbc), vertex_point(0)));
        CHECK(proj_eq(midpoint(vertex_point(0), r), mbc));
    }

    SECTION("ideal arguments are refused") {
        CHECK(code_of([] { (void)midpoint(BaryPoint(1, -1, 0), BaryPoint(1, 0, 0)); }) ==
              ErrorCode::ideal_point);
        CHECK(code_of([] { (void)reflect_in(BaryPoint(1, 0, 0), BaryPoint(1, -1, 0)); }) ==
              ErrorCode::ideal_point);
    }
}

TEST_CASE("distances through the coordinate change stay exact") {
    TrianglePtr t = wide_triangle();

    CHECK(dist_sq(t->B, t->C) == FieldElem(13));
    CHECK(dist_sq(t->A, t->C) == FieldElem(36));
    CHECK(dist_sq(t->A, t->B) == FieldElem(25));

    // The incircle touch point on side CA sits at distance s - a from A.
    auto [q13, r13] = adjoin_sqrt(nullptr, FieldElem(13));
    CartPoint touch{(FieldElem(-3) + r13) / 2, FieldElem(0)};
    FieldElem expected = (FieldElem(67) - 11 * r13) / 2;  // ((11 - sqrt(13))/2)^2
    CHECK(dist_sq(CartPoint{FieldElem(4), FieldElem(0)}, touch) == expected);
}

TEST_CASE("randomized barycentric identities") {
    testutil::RNG rng(99);
    TrianglePtr t = wide_triangle();

    for (int i = 0; i < 25; ++i) {
        Rational u = testutil::random_rational(rng), v = testutil::random_rational(rng);
        CartPoint c{FieldElem(u), FieldElem(v)};
        BaryPoint p = from_cartesian(*t, c);
        if (is_ideal(p)) continue;  // cannot happen for finite cartesian input
        CartPoint back = to_cartesian(*t, p);
        CHECK(back == c);

        BaryPoint q = from_cartesian(*t, CartPoint{FieldElem(v), FieldElem(u)});
        if (!proj_eq(p, q)) {
            BaryPoint m = midpoint(p, q);
            CHECK(dist_sq(*t, m, p) == dist_sq(*t, m, q));
            CHECK(proj_eq(reflect_in(p, m), q));
            CHECK(on_line(line_through(p, q), m));
        }
    }
}
