#include <barning/transfer.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace barning;

namespace {

double lam(double t) {
    return 4.0 / (std::numbers::pi * (1.0 + t * t));
}

// Hf(u) computed along the inverse branches in the t-coordinate:
// sum of f(F(u)) |F'(u)| lambda(F(u)) / lambda(u).
template <typename F> double transfer_by_branches(F f, double u) {
    const double f1 = u / (1 + 2 * u), d1 = 1 / ((1 + 2 * u) * (1 + 2 * u));
    const double f2 = 1 / (2 + u), d2 = 1 / ((2 + u) * (2 + u));
    const double f3 = 1 / (2 - u), d3 = 1 / ((2 - u) * (2 - u));
    return (f(f1) * d1 * lam(f1) + f(f2) * d2 * lam(f2) + f(f3) * d3 * lam(f3)) / lam(u);
}

double smooth(double t) {
    return 1.0 + 0.3 * std::cos(3.0 * t) + 0.2 * t * t;
}

} // namespace

TEST_CASE("transfer operator matches the branch formula") {
    const GridFunction f = GridFunction::sample(smooth);
    for (double u : {0.001, 0.05, 0.2, 1.0 / 3.0, 0.4, 0.5, 0.7, 0.95, 0.999}) {
        CAPTURE(u);
        CHECK(transfer_eval(f, u) == doctest::Approx(transfer_by_branches(smooth, u)).epsilon(1e-9));
    }
}

TEST_CASE("constant density") {
    const GridFunction one = GridFunction::sample([](double) { return 1.0; });
    CHECK(lambda_mass(one) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lambda_mass_of_transfer(one) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lambda_density(0.0) == doctest::Approx(4.0 / std::numbers::pi));

    const auto first = partition_masses(one);
    CHECK(first[0] == doctest::Approx(4.0 / std::numbers::pi * std::atan(1.0 / 3.0)).epsilon(1e-12));
    CHECK(first[0] + first[1] + first[2] == doctest::Approx(1.0).epsilon(1e-14));

    const GridFunction trap = GridFunction::sample([](double) { return 1.0; }, 10000, 1e-4, QuadratureRule::Trapezoid);
    // the trapezoid rule skips the two edge strips
    CHECK(lambda_mass(trap) == doctest::Approx(1.0 - 2e-4 * (lam(0) + lam(1)) / 2).epsilon(1e-6));
}

TEST_CASE("mass is preserved") {
    const GridFunction f = GridFunction::sample(smooth);
    CHECK(lambda_mass_of_transfer(f) == doctest::Approx(lambda_mass(f)).epsilon(1e-10));
    CHECK(lambda_mass(transfer_apply(f)) == doctest::Approx(lambda_mass(f)).epsilon(1e-8));
}

TEST_CASE("invariant density is a fixed point") {
    const auto h = [](double t) { return (1.0 + t * t) / (t * (1.0 - t)); };
    const GridFunction f = GridFunction::sample(h);
    for (double u : {0.01, 0.1, 0.3, 0.45, 0.6, 0.9, 0.99}) {
        CHECK(transfer_eval(f, u) == doctest::Approx(h(u)).epsilon(1e-10));
    }
}

TEST_CASE("digit distributions") {
    const auto dists = digit_distributions(6, 2000);
    REQUIRE(dists.size() == 6);
    for (const auto &d : dists) {
        CHECK(d[0] + d[1] + d[2] == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(d[0] == doctest::Approx(d[2]).epsilon(1e-6));
    }
    // mass drains out of the middle arc
    for (std::size_t n = 1; n < dists.size(); ++n) {
        CHECK(dists[n][1] < dists[n - 1][1]);
    }
    const auto third = digit_distribution(3, 2000);
    CHECK(third[1] == doctest::Approx(dists[2][1]).epsilon(1e-12));
}

TEST_CASE("grid function basics") {
    const GridFunction f = GridFunction::sample([](double t) { return t; }, 101, 0.01);
    CHECK(f.size() == 101);
    CHECK(f.node(0) == doctest::Approx(0.01));
    CHECK(f.node(100) == doctest::Approx(0.99));
    CHECK(f(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f(0.001) >= 0.0);
    CHECK_THROWS(GridFunction(0.01, std::vector<double>{1.0}));
}
