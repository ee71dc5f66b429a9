// Text round-trips: canonical rendering and the expression grammar.

#include <catch2/catch_amalgamated.hpp>

#include "feuerbach/text.hpp"
#include "helpers.hpp"

using namespace feuerbach;

namespace {

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

TEST_CASE("rendering rational values") {
    CHECK(render(FieldElem(6)) == "6");
    CHECK(render(FieldElem(0)) == "0");
    CHECK(render(FieldElem(-1)) == "-1");
    CHECK(render(FieldElem(Rational(-3, 2))) == "-3/2");
    CHECK(render(FieldElem(Rational(5, 6))) == "5/6");
}

TEST_CASE("rendering tower elements") {
    auto [q13, r13] = adjoin_sqrt(nullptr, FieldElem(13));

    CHECK(render(r13) == "sqrt(13)");
    CHECK(render(-r13) == "-sqrt(13)");
    CHECK(render(r13 / 13) == "sqrt(13)/13");
    CHECK(render(FieldElem(11) - r13) == "11-sqrt(13)");
    CHECK(render((FieldElem(-3) + r13) / 2) == "(-3+sqrt(13))/2");
    CHECK(render((FieldElem(-79) + 5 * r13) / 102) == "(-79+5*sqrt(13))/102");

    auto [q133, r3] = adjoin_sqrt(q13, FieldElem::rational_in(q13, 3));
    FieldElem x = FieldElem(1) + 2 * lift(r13, q133) * r3;
    CHECK(render(x) == "1+2*sqrt(13)*sqrt(3)");
    CHECK(render(r3 * r3) == "3");
}

TEST_CASE("parsing the element grammar") {
    ElemParser p;

    SECTION("plain arithmetic stays rational") {
        CHECK(p.parse("42").rational_value() == 42);
        CHECK(p.parse("-7/2").rational_value() == Rational(-7, 2));
        CHECK(p.parse("1/3+1/6").rational_value() == Rational(1, 2));
        CHECK(p.parse("2*3-4/2").rational_value() == 4);
        CHECK(p.parse("(1+2)*(3-5)").rational_value() == -6);
        CHECK(p.parse("sqrt(4)").rational_value() == 2);
        CHECK(p.tower() == nullptr);
    }

    SECTION("radicals grow the tower once each") {
        FieldElem v = p.parse("(-3+sqrt(13))/2");
        REQUIRE(tower_level(p.tower()) == 1);
        CHECK(p.tower()->rational_radicand == Rational(13));
        CHECK(v.coeff() == std::vector<Rational>{Rational(-3, 2), Rational(1, 2)});

        FieldElem w = p.parse("sqrt(13)*sqrt(13)");
        CHECK(tower_level(p.tower()) == 1);  // reused, not re-adjoined
        CHECK(w == FieldElem(13));
    }

    SECTION("non-square-free radicands share a radical") {
        FieldElem a = p.parse("sqrt(8)");
        FieldElem b = p.parse("sqrt(2)");
        CHECK(tower_level(p.tower()) == 1);
        CHECK(a == 2 * b);
    }

    SECTION("nested radicals denest when possible") {
        FieldElem v = p.parse("sqrt(14+6*sqrt(5))");
        CHECK(tower_level(p.tower()) == 1);
        CHECK(v.coeff() == std::vector<Rational>{3, 1});  // 3 + sqrt(5)
    }

    SECTION("whitespace is insignificant") {
        FieldElem v = p.parse("  ( -3 + sqrt( 13 ) ) / 2 ");
        CHECK(v.coeff() == std::vector<Rational>{Rational(-3, 2), Rational(1, 2)});
    }

    SECTION("leading minus on a radical") {
        FieldElem v = p.parse("-sqrt(13)");
        CHECK(v.coeff() == std::vector<Rational>{0, -1});
    }
}

TEST_CASE("parse errors carry position information") {
    auto parses_as_error = [](const char* text) {
        ElemParser p;
        return code_of([&] { (void)p.parse(text); });
    };

    CHECK(parses_as_error("") == ErrorCode::parse_error);
    CHECK(parses_as_error("5+") == ErrorCode::parse_error);
    CHECK(parses_as_error("(5") == ErrorCode::parse_error);
    CHECK(parses_as_error("5)") == ErrorCode::parse_error);
    CHECK(parses_as_error("sqrt 4") == ErrorCode::parse_error);
    CHECK(parses_as_error("abc") == ErrorCode::parse_error);
    CHECK(parses_as_error("12a") == ErrorCode::parse_error);
    CHECK(parses_as_error("5/0") == ErrorCode::parse_error);
    CHECK(parses_as_error("5/(3-3)") == ErrorCode::parse_error);
    CHECK(parses_as_error("sqrt(-4)") == ErrorCode::parse_error);

    ElemParser p;
    try {
        (void)p.parse("1+sqrt 13");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("render and parse round-trip") {
    testutil::RNG rng(7);
    TowerPtr t = adjoin_sqrt(nullptr, FieldElem(2)).first;
    t = adjoin_sqrt(t, FieldElem::rational_in(t, 3)).first;

    for (int i = 0; i < 40; ++i) {
        FieldElem x = testutil::random_elem(rng, t);
        ElemParser p;
        FieldElem back = p.parse(render(x));
        auto moved = transfer_to(back, t);
        REQUIRE(moved);
        CHECK(*moved == x);
    }
}
