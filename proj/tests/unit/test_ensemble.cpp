#include "oracles.hpp"

#include <barning/codec.hpp>
#include <barning/ensemble.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace barning;

namespace {

// m > n > 0, m^2 + n^2 <= R^2: all pairs and the coprime opposite-parity ones.
std::pair<std::uint64_t, std::uint64_t> count_pairs(std::uint64_t r) {
    std::uint64_t all = 0, good = 0;
    for (std::uint64_t m = 1; m <= r; ++m) {
        for (std::uint64_t n = 1; n < m && m * m + n * n <= r * r; ++n) {
            ++all;
            if (std::gcd(m, n) == 1 && (m + n) % 2 == 1) {
                ++good;
            }
        }
    }
    return {all, good};
}

} // namespace

TEST_CASE("coprime density against a direct count") {
    for (std::uint64_t r : {10, 37, 250, 1000}) {
        const auto [all, good] = count_pairs(r);
        const CoprimeDensity d = coprime_density(r);
        CAPTURE(r);
        CHECK(d.lattice_pairs == all);
        CHECK(d.coprime_pairs == good);
        CHECK(d.ratio == doctest::Approx(double(good) / double(all)));
    }
    CHECK(coprime_density(10).coprime_pairs == 16);
    CHECK_THROWS_AS(coprime_density(9), DomainError);
}

TEST_CASE("arc distribution against a direct count") {
    const std::uint64_t n = 3000;
    const auto ppts = oracle::ppt_by_leg_scan(static_cast<long>(n));
    const std::vector<double> angles{0.1, 0.5, 0.785, 1.2, 1.5};
    const ArcDistribution a = arc_distribution(n, angles, 2);
    CHECK(a.population == ppts.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        std::uint64_t below = 0;
        for (const auto &[x, y, c] : ppts) {
            below += std::atan2(double(y), double(x)) < angles[i] ? 1 : 0;
        }
        const double emp = double(below) / double(ppts.size());
        CHECK(a.points[i].empirical == doctest::Approx(emp));
        CHECK(a.points[i].reference == doctest::Approx(2 * angles[i] / std::numbers::pi));
        sup = std::max(sup, std::abs(emp - a.points[i].reference));
    }
    CHECK(a.sup_deviation == doctest::Approx(sup));
    CHECK(arc_distribution(n, angles, 1).sup_deviation == a.sup_deviation);

    const auto grid = uniform_angle_grid(3);
    CHECK(grid[1] == doctest::Approx(std::numbers::pi / 4));
}

TEST_CASE("first digit histogram against encode") {
    const std::uint64_t n = 2000;
    std::array<std::uint64_t, 3> counts{};
    std::uint64_t roots = 0;
    for (const auto &[a, b, c] : oracle::ppt_by_leg_scan(static_cast<long>(n))) {
        const Expansion e = encode(Triple(a, b, c));
        if (e.length() == 0) {
            ++roots;
        } else {
            ++counts[static_cast<std::size_t>(digit_value(e.digits().front()) - 1)];
        }
    }
    const DigitHistogram h = first_digit_histogram(n, 3);
    CHECK(h.digits == counts);
    CHECK(h.terminal == roots);
    CHECK(h.total == counts[0] + counts[1] + counts[2] + roots);

    const auto lim = first_digit_limit();
    CHECK(lim[0] == doctest::Approx(4 / std::numbers::pi * std::atan(1.0 / 3.0)));
    CHECK(lim[0] == doctest::Approx(lim[2]));
    CHECK(lim[0] + lim[1] + lim[2] == doctest::Approx(1.0));
}
