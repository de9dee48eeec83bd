#include "oracles.hpp"

#include <barning/codec.hpp>
#include <barning/interval_map.hpp>
#include <barning/tree.hpp>

#include <doctest.h>

using namespace barning;

TEST_CASE("matrices") {
    const auto &m = barning_matrices();
    CHECK(m[0].determinant() == 1);
    CHECK(m[1].determinant() == -1);
    CHECK(m[2].determinant() == 1);
    CHECK(m[0].apply(Triple(3, 4, 5)) == Triple(15, 8, 17));
    CHECK(m[1].apply(Triple(3, 4, 5)) == Triple(21, 20, 29));
    CHECK(m[2].apply(Triple(3, 4, 5)) == Triple(5, 12, 13));
}

TEST_CASE("digit of a triple by slope") {
    CHECK(digit_of(Triple(3, 4, 5)) == Digit::OE);
    CHECK(digit_of(Triple(4, 3, 5)) == Digit::EO);
    CHECK(digit_of(Triple(15, 8, 17)) == Digit::D1);
    CHECK(digit_of(Triple(21, 20, 29)) == Digit::D2);
    CHECK(digit_of(Triple(5, 12, 13)) == Digit::D3);
}

TEST_CASE("parent undoes child") {
    enumerate_by_c(BigInt(2000), RootSelection::Both, [](const TreeCursor &cur) {
        for (Digit d : {Digit::D1, Digit::D2, Digit::D3}) {
            const Triple kid = child(cur.triple, d);
            REQUIRE(parent(kid) == cur.triple);
            REQUIRE(digit_of(kid) == d);
        }
    });
    CHECK(parent(Triple(3, 4, 5)) == Triple(1, 0, 1));
    CHECK(parent(Triple(4, 3, 5)) == Triple(0, 1, 1));
}

TEST_CASE("encode and decode agree with the brute-force PPT set") {
    for (const auto &[a, b, c] : oracle::ppt_by_leg_scan(600)) {
        const Triple t(a, b, c);
        const Expansion e = encode(t);
        REQUIRE(e.is_finite());
        REQUIRE(decode(e) == t);
        // root parity follows the parity of a
        REQUIRE((e.terminal() == Digit::OE) == t.a_is_odd());
    }
}

TEST_CASE("sample expansions") {
    CHECK(encode(Triple(45, 28, 53)).to_string() == "13:oe");
    CHECK(decode(Expansion::parse("22:oe")) == Triple(119, 120, 169));
    CHECK(decode(Expansion::parse(":eo")) == Triple(4, 3, 5));
    CHECK(decode(Expansion::parse("31:eo")) == child(child(Triple(4, 3, 5), Digit::D1), Digit::D3));
}

TEST_CASE("encode rejects non-PPTs") {
    CHECK_THROWS_AS(encode(Triple(-3, 4, 5)), DomainError);
    CHECK_THROWS_AS(encode(Triple(1, 0, 1)), DomainError);
    CHECK_THROWS_AS(decode(Expansion::prefix(parse_word("12"))), DomainError);
}

TEST_CASE("circle map is conjugate to the interval map") {
    enumerate_by_c(BigInt(3000), RootSelection::Both, [](const TreeCursor &cur) {
        if (cur.path.length() == 0) {
            return;
        }
        const QPoint p = point_from_triple(cur.triple);
        const Rat t = from_circle(p);
        REQUIRE(to_circle(t) == p);
        REQUIRE(from_circle(circle_map(p)) == step(t).image);
        REQUIRE(point_from_triple(parent(cur.triple)) == circle_map(p));
    });
}
