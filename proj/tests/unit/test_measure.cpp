#include <barning/measure.hpp>
#include <barning/point_spec.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>

using namespace barning;

namespace {

double nu_by_quadrature(double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [](double t) { return 1.0 / (std::sqrt(2.0) * t * (1.0 - t)); }, a, b, 15, 1e-15);
}

DigitWord word(const char *s) {
    return parse_word(s);
}

} // namespace

TEST_CASE("nu of intervals") {
    for (const auto &[a, b] : {std::pair{Rat(1, 5), Rat(2, 3)}, std::pair{Rat(1, 100), Rat(1, 2)},
                               std::pair{Rat(3, 7), Rat(4, 7)}}) {
        CHECK(nu_interval(a, b).value() == doctest::Approx(nu_by_quadrature(a.to_double(), b.to_double())).epsilon(1e-12));
    }
    CHECK(nu_interval(Rat(0), Rat(1, 2)).infinite);
    CHECK(nu_interval(Rat(1, 2), Rat(1)).infinite);
    CHECK_THROWS_AS(nu_interval(Rat(1, 2), Rat(1, 3)), DomainError);
    CHECK(nu_density(0.5) == doctest::Approx(4.0 / std::sqrt(2.0)));
}

TEST_CASE("cylinder measures are exact and additive") {
    CHECK(cylinder_measure(word("12")).log_argument == Rat(4, 3));
    CHECK(cylinder_measure(word("13")).log_argument == Rat(3, 2));
    CHECK(measure_ratio(cylinder_measure(word("12")), cylinder_measure(word("13"))) ==
          doctest::Approx(std::log(4.0 / 3.0) / std::log(1.5)));
    CHECK(cylinder_measure(word("1")).infinite);
    CHECK(cylinder_measure(word("333")).infinite);
    CHECK_FALSE(cylinder_measure(word("2")).infinite);

    for (const char *w : {"2", "12", "31", "212", "1113"}) {
        DigitWord base = word(w);
        NuMeasure sum;
        for (Digit d : {Digit::D1, Digit::D2, Digit::D3}) {
            DigitWord kid = base;
            kid.push_back(d);
            sum = sum + cylinder_measure(kid);
        }
        CAPTURE(w);
        CHECK(sum == cylinder_measure(base));
    }
}

TEST_CASE("invariance equation") {
    const RationalDensity f = [](const Rat &t) { return (t * (Rat(1) - t)).reciprocal(); };
    for (const Rat &t : {Rat(1, 1000), Rat(1, 3), Rat(1, 2), Rat(7, 9), Rat(999, 1000)}) {
        CHECK(invariance_residual(f, t) == Rat(0));
    }
    // a density that is not invariant
    const RationalDensity g = [](const Rat &t) { return t.reciprocal(); };
    CHECK(invariance_residual(g, Rat(1, 4)) > Rat(0));

    // constant density at 1/4: 1/(3/2)^2 + 1/(9/4)^2 + 1/(7/4)^2 - 1
    const RationalDensity one = [](const Rat &) { return Rat(1); };
    CHECK(invariance_residual(one, Rat(1, 4)) == Rat(125, 3969));

    InvarianceEquation broken = invariance_equation();
    broken[0].jacobian_c = 1;
    CHECK(invariance_residual(f, Rat(1, 4), broken) > Rat(1, 100));
}

TEST_CASE("pushforward identity as stated is off by a factor of two") {
    // residual of nu = D*mu-density evaluates to exactly the nu density
    for (const Rat &t : {Rat(1, 10), Rat(1, 3), Rat(3, 5)}) {
        CHECK(pushforward_check(t) == doctest::Approx(nu_density(t.to_double())).epsilon(1e-12));
    }
}

TEST_CASE("hopf counts") {
    // periodic 12 12 12 ...: numerator hits every second digit, denominator never
    const HopfResult r = hopf_ratio(parse_point("sqrt:5:-2:1:1"), word("12"), word("21"), 1000);
    CHECK(r.steps == 1000);
    CHECK(r.numerator_count == 500);
    CHECK(r.denominator_count == 499);
    CHECK(r.status == HopfStatus::Ok);

    const HopfResult z = hopf_ratio(parse_point("sqrt:2:-1:1:1"), word("12"), word("13"), 100);
    CHECK_FALSE(z.ratio.has_value());
    CHECK(z.status == HopfStatus::ZeroDenominator);
    CHECK(to_string(z.status) == "zero-denominator");

    // rationals stop at their terminal
    CHECK(hopf_ratio(Rat(2, 7), word("2"), word("2"), 100).steps < 100);
    CHECK_THROWS_AS(hopf_ratio(Rat(1, 7), word("1"), word("2"), 10), DomainError);
}

TEST_CASE("inducing set") {
    CHECK(in_inducing_set(Rat(1, 2)));
    CHECK_FALSE(in_inducing_set(Rat(1, 5)));
    CHECK_FALSE(in_inducing_set(Rat(2, 3)));
    // J is exactly the union of the listed two-digit cylinders
    const std::array<Digit, 3> ds{Digit::D1, Digit::D2, Digit::D3};
    for (Digit a : ds) {
        for (Digit b : ds) {
            const CylinderInterval c = cylinder({a, b});
            const Rat mid = (c.lo + c.hi) / Rat(2);
            CHECK(inducing_set_by_digits(a, b) == in_inducing_set(mid));
        }
    }
}

TEST_CASE("return times") {
    // 1/25 -> 1/23 -> ... the 1-run shrinks by 2 in the denominator
    CHECK(return_time_J(Rat(1, 25)) == 11);
    CHECK(return_time_J(Rat(3, 5)) == 1);
    // cylinders [1,1,2] = (1/7,1/6) and [1,1,1,2] = (1/9,1/8)
    CHECK(return_time_J(Rat(13, 84)) == 1);
    CHECK(return_time_J(Rat(17, 144)) == 2);
    CHECK_THROWS_AS(return_time_J(Rat(1, 3)), DomainError);
    CHECK_THROWS_AS(return_time_J(Rat(1, 1'000'001), 10), HorizonExceeded);
    // sqrt2-1 is all 2s, so it is in J after one step
    CHECK(return_time_J(parse_point("sqrt:2:-1:1:1")) == 1);
}

TEST_CASE("block re-expansion") {
    const auto blocks = block_reexpand(word("1123212"));
    REQUIRE(blocks.size() == 3);
    CHECK(word_to_string(blocks[0].digits) == "112");
    CHECK(word_to_string(blocks[1].digits) == "32");
    CHECK(word_to_string(blocks[2].digits) == "12");
    CHECK(block_reexpand(word("21")).back().complete == false);
    CHECK(blocks_to_string(block_reexpand(word("2113"))) == "(2,113*)");
}
