#include <barning/rat.hpp>
#include <barning/types.hpp>

#include <doctest.h>

using namespace barning;

TEST_CASE("rationals stay canonical") {
    const Rat r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rat::parse("10/4") == Rat(5, 2));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), DomainError);
    CHECK_THROWS_AS(Rat::parse("1/x"), DomainError);
}

TEST_CASE("digit words") {
    CHECK(word_to_string(parse_word("1213")) == "1213");
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("124"), DomainError);
    CHECK(digit_from_int(2) == Digit::D2);
    CHECK_THROWS(digit_from_int(0));
    CHECK(is_terminal(Digit::OE));
    CHECK_FALSE(is_terminal(Digit::D3));
}

TEST_CASE("expansion text grammar") {
    const Expansion e = Expansion::parse("13:oe");
    CHECK(e.is_finite());
    CHECK(e.length() == 2);
    CHECK(e.terminal() == Digit::OE);
    CHECK(e.to_string() == "13:oe");

    CHECK(Expansion::parse(":eo") == Expansion::finite({}, Digit::EO));
    CHECK(Expansion::parse(":eo").to_string() == ":eo");

    const Expansion p = Expansion::prefix(parse_word("2222"));
    CHECK_FALSE(p.is_finite());
    CHECK(p.to_string() == "2222…");
    CHECK(Expansion::parse(p.to_string()) == p);

    CHECK_THROWS_AS(Expansion::parse("13:xx"), DomainError);
    CHECK_THROWS_AS(Expansion::parse("4:oe"), DomainError);
    CHECK_THROWS_AS(Expansion::parse(""), DomainError);
}

TEST_CASE("triples check their invariants") {
    const Triple t(45, 28, 53);
    CHECK(t.is_ppt());
    CHECK(t.a_is_odd());
    CHECK(t.m() == 8);
    CHECK(t.n() == 25);
    CHECK(t.q() == 20);
    CHECK(t.q() * t.q() == 2 * t.m() * t.n());

    CHECK_THROWS_AS(Triple(3, 4, 6), DomainError);
    CHECK_THROWS_AS(Triple(6, 8, 10), DomainError);
    CHECK_THROWS_AS(Triple(3, 4, -5), DomainError);
    CHECK(Triple(1, 0, 1).is_closure());
    CHECK(Triple(-3, 4, 5).a() == -3);
}

TEST_CASE("points and triples") {
    const QPoint p(Rat(45, 53), Rat(28, 53));
    CHECK(triple_from_point(p) == Triple(45, 28, 53));
    CHECK(point_from_triple(Triple(5, 12, 13)) == QPoint(Rat(5, 13), Rat(12, 13)));
    CHECK(QPoint(Rat(1), Rat(0)).is_closure());
    CHECK_THROWS_AS(QPoint(Rat(1, 2), Rat(1, 2)), DomainError);
    CHECK_THROWS_AS(triple_from_point(QPoint(Rat(0), Rat(1))), DomainError);
}
