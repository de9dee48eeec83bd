#include "oracles.hpp"

#include <barning/interval_map.hpp>
#include <barning/point_spec.hpp>
#include <barning/tree.hpp>

#include <doctest.h>
#include <mpfr.h>

#include <string>

using namespace barning;

namespace {

// Digits of a real computed by iterating the forward branches in MPFR at a
// fixed, generous precision. Independent of the certified engine.
struct MpfrOrbit {
    mpfr_t t, third, half, tmp;

    explicit MpfrOrbit(mpfr_prec_t prec) {
        mpfr_inits2(prec, t, third, half, tmp, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_ui(third, 1, MPFR_RNDN);
        mpfr_div_ui(third, third, 3, MPFR_RNDN);
        mpfr_set_d(half, 0.5, MPFR_RNDN);
    }
    ~MpfrOrbit() { mpfr_clears(t, third, half, tmp, static_cast<mpfr_ptr>(nullptr)); }

    std::string digits(std::size_t count) {
        std::string out;
        for (std::size_t i = 0; i < count; ++i) {
            if (mpfr_cmp(t, third) < 0) {
                out += '1';
                mpfr_mul_2ui(tmp, t, 1, MPFR_RNDN);
                mpfr_ui_sub(tmp, 1, tmp, MPFR_RNDN);
                mpfr_div(t, t, tmp, MPFR_RNDN);
            } else if (mpfr_cmp(t, half) < 0) {
                out += '2';
                mpfr_ui_div(t, 1, t, MPFR_RNDN);
                mpfr_sub_ui(t, t, 2, MPFR_RNDN);
            } else {
                out += '3';
                mpfr_ui_div(t, 1, t, MPFR_RNDN);
                mpfr_ui_sub(t, 2, t, MPFR_RNDN);
            }
        }
        return out;
    }
};

std::string certified(const Point &p, std::size_t n) {
    ExpandOptions o;
    o.max_digits = n;
    return word_to_string(expand(p, o).digits());
}

} // namespace

TEST_CASE("branches and their inverses") {
    for (const Branch &b : branches()) {
        for (const Rat &u : {Rat(1, 7), Rat(1, 2), Rat(5, 6), Rat(99, 100)}) {
            const Rat t = b.inverse(u);
            REQUIRE(t > b.lower);
            REQUIRE(t < b.upper);
            REQUIRE(b.forward(t) == u);
            REQUIRE(inverse_branch(b.label, u) == t);
            REQUIRE(step(t).digit == b.label);
            REQUIRE(step(t).image == u);
        }
    }
    CHECK(inverse_branch(Digit::D1, Rat(1)) == Rat(1, 3));
    CHECK(inverse_branch(Digit::D2, Rat(0)) == Rat(1, 2));
}

TEST_CASE("rational terminals") {
    CHECK(step(Rat(1, 2)).digit == Digit::OE);
    CHECK(step(Rat(1, 2)).image == Rat(0));
    CHECK(step(Rat(1, 3)).digit == Digit::EO);
    CHECK(step(Rat(1, 3)).image == Rat(1));
    CHECK_THROWS_AS(step(Rat(0)), DomainError);
    CHECK_THROWS_AS(step(Rat(3, 2)), DomainError);
}

TEST_CASE("rational expansions match the triple expansions") {
    enumerate_by_c(BigInt(2000), RootSelection::Both, [](const TreeCursor &cur) {
        const Rat t = from_circle(point_from_triple(cur.triple));
        REQUIRE(expand(t, {.max_digits = 1000}) == cur.path);
    });
    CHECK(expand(Rat(1, 1000), {.max_digits = 5}) == Expansion::prefix(parse_word("11111")));
}

TEST_CASE("cylinders") {
    const CylinderInterval c = cylinder(parse_word("13"));
    CHECK(c.lo == Rat(1, 4));
    CHECK(c.hi == Rat(1, 3));
    CHECK(from_circle(QPoint(Rat(45, 53), Rat(28, 53))) == Rat(2, 7));
    CHECK(cylinder({}).lo == Rat(0));
    CHECK(cylinder({}).hi == Rat(1));
    // children tile the parent
    const CylinderInterval p = cylinder(parse_word("2"));
    const Rat e1 = cylinder(parse_word("21")).lo, e2 = cylinder(parse_word("21")).hi;
    const Rat e3 = cylinder(parse_word("22")).lo, e4 = cylinder(parse_word("22")).hi;
    const Rat e5 = cylinder(parse_word("23")).lo, e6 = cylinder(parse_word("23")).hi;
    CHECK(std::min({e1, e2, e3, e4, e5, e6}) == p.lo);
    CHECK(std::max({e1, e2, e3, e4, e5, e6}) == p.hi);
}

TEST_CASE("surd orbits match an MPFR orbit") {
    struct Case {
        const char *spec;
        unsigned long d;
        long p, q, r;
    };
    for (const Case &c : {Case{"sqrt:2:-1:1:1", 2, -1, 1, 1}, Case{"sqrt:10:-3:1:1", 10, -3, 1, 1},
                          Case{"sqrt:7:1:1:5", 7, 1, 1, 5}, Case{"sqrt:13:-1:1:4", 13, -1, 1, 4}}) {
        MpfrOrbit orbit(4000);
        mpfr_sqrt_ui(orbit.t, c.d, MPFR_RNDN);
        mpfr_mul_si(orbit.t, orbit.t, c.q, MPFR_RNDN);
        mpfr_add_si(orbit.t, orbit.t, c.p, MPFR_RNDN);
        mpfr_div_si(orbit.t, orbit.t, c.r, MPFR_RNDN);
        CAPTURE(c.spec);
        CHECK(certified(parse_point(c.spec), 300) == orbit.digits(300));
    }
}

TEST_CASE("transcendental points match an MPFR orbit") {
    MpfrOrbit half(8000);
    mpfr_set_d(half.t, 0.5, MPFR_RNDN);
    mpfr_tan(half.t, half.t, MPFR_RNDN);
    CHECK(certified(parse_point("tanhalf"), 400) == half.digits(400));

    MpfrOrbit pi(8000);
    mpfr_const_pi(pi.t, MPFR_RNDN);
    mpfr_mul_2ui(pi.t, pi.t, 1, MPFR_RNDN);
    mpfr_ui_div(pi.t, 1, pi.t, MPFR_RNDN);
    mpfr_tan(pi.t, pi.t, MPFR_RNDN);
    CHECK(certified(parse_point("recip-pi"), 2000) == pi.digits(2000));
}

TEST_CASE("digit stream reports precision and budget") {
    DigitStream s(parse_point("recip-pi"));
    for (int i = 0; i < 100; ++i) {
        REQUIRE(s.next().has_value());
    }
    CHECK(s.position() == 100);
    CHECK(s.bits_in_use() >= 64);

    DigitStream exact(Rat(2, 7));
    CHECK(exact.bits_in_use() == 0);

    DigitStream starved(parse_point("tanhalf"), 64, 64);
    CHECK_THROWS_AS(
        [&] {
            for (int i = 0; i < 10'000; ++i) {
                starved.next();
            }
        }(),
        UndecidedDigit);
}

TEST_CASE("interval step") {
    const IntervalStep s = step(enclose_rational(Rat(1, 5), 64));
    REQUIRE(s.digit.has_value());
    CHECK(*s.digit == Digit::D1);
    CHECK(s.image_lo <= Rat(1, 3));
    CHECK(s.image_hi >= Rat(1, 3));
    // an enclosure of 1/2 cannot decide
    CHECK(step(enclose_rational(Rat(1, 2), 64)).needs_refinement());
}

TEST_CASE("points from periodic expansions") {
    const Rat tol(BigInt(1), BigInt(1) << 200);
    const PrecisionInterval p = point_from_infinite_expansion(periodic_source(parse_word("2")), tol);
    CHECK(p.hi() - p.lo() <= tol);
    const Surd root2 = Surd::from_quadratic(BigInt(-1), BigInt(1), BigInt(2), BigInt(1));
    CHECK(root2.compare(p.lo()) >= 0);
    CHECK(root2.compare(p.hi()) <= 0);
    // refining keeps consuming digits
    CHECK(p.refine().hi() - p.refine().lo() < p.hi() - p.lo());

    CHECK_THROWS_AS(periodic_source(parse_word("")), DomainError);
    CHECK_THROWS_AS(point_from_infinite_expansion([](std::size_t i) -> std::optional<Digit> {
                        if (i < 3) {
                            return Digit::D2;
                        }
                        return std::nullopt;
                    },
                                                  tol),
                    DomainError);
    // all-ones words converge too slowly to reach the tolerance
    CHECK_THROWS_AS(point_from_infinite_expansion(periodic_source(parse_word("1")), tol, 1000), DomainError);
}

TEST_CASE("circle embedding") {
    CHECK(to_circle(Rat(1, 2)) == QPoint(Rat(3, 5), Rat(4, 5)));
    CHECK(from_circle(QPoint(Rat(3, 5), Rat(4, 5))) == Rat(1, 2));
    const CircleBox box = to_circle(std::get<PrecisionInterval>(parse_point("tanhalf")));
    CHECK(box.x_lo.to_double() == doctest::Approx(std::cos(1.0)).epsilon(1e-12));
    CHECK(box.y_hi.to_double() == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
}

TEST_CASE("point specs") {
    CHECK(std::get<Rat>(parse_point("rat:3/7")) == Rat(3, 7));
    CHECK(std::holds_alternative<Surd>(parse_point("sqrt:5:-1:1:2")));
    // a zero surd part collapses to a rational; a square radicand is rejected
    CHECK(std::get<Rat>(parse_point("sqrt:5:1:0:3")) == Rat(1, 3));
    CHECK_THROWS_AS(parse_point("sqrt:4:0:1:4"), DomainError);
    CHECK(std::holds_alternative<PrecisionInterval>(parse_point("tanquarter")));
    CHECK_THROWS_AS(parse_point("pi"), DomainError);
    CHECK_THROWS_AS(parse_point("sqrt:2:1"), DomainError);
    CHECK_THROWS_AS(parse_point("rat:1/0"), DomainError);
    CHECK(point_spec_help().find("recip-pi") != std::string::npos);
}
