#include <barning/euclid.hpp>
#include <barning/interval_map.hpp>

#include <doctest.h>

#include <numeric>
#include <random>

using namespace barning;

TEST_CASE("sample execution") {
    const EuclidResult r = euclid_gcd(155, 100);
    CHECK(r.gcd == 5);
    CHECK(r.steps == 5);
    CHECK(format_trace(r.trace) == "(155,100) -> (100,45) -> (45,10) -> (25,10) -> (10,5) -> (5,0)");
    CHECK(euclid_gcd(100, 155).gcd == 5);
    CHECK(euclid_gcd(155, 100, false).trace.empty());
}

TEST_CASE("single steps") {
    CHECK(euclid_step({10, 3}) == EuclidState{4, 3});
    CHECK(euclid_step({10, 4}) == EuclidState{4, 2});
    CHECK(euclid_step({10, 7}) == EuclidState{7, 4});
    CHECK(euclid_step({10, 5}) == EuclidState{5, 0});
    CHECK_THROWS_AS(euclid_step({5, 5}), DomainError);
    CHECK_THROWS_AS(euclid_step({5, 0}), DomainError);
    CHECK_THROWS_AS(euclid_step({3, 5}), DomainError);
}

TEST_CASE("edge inputs") {
    CHECK(euclid_gcd(7, 0).gcd == 7);
    CHECK(euclid_gcd(0, 7).gcd == 7);
    CHECK(euclid_gcd(9, 9).gcd == 9);
    CHECK(euclid_gcd(9, 9).steps == 0);
    CHECK_THROWS_AS(euclid_gcd(0, 0), DomainError);
    const std::uint64_t big = ~std::uint64_t{0};
    // (x, x-1) walks down one unit per step, so stay small here
    CHECK(euclid_gcd(1001, 1000).steps == 1000);
    CHECK(euclid_gcd(big, big / 3 * 2, false).gcd == std::gcd(big, big / 3 * 2));
}

TEST_CASE("agrees with std::gcd") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::uint64_t> up_to(1, 1'000'000'000'000'000'000ULL);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t x = up_to(rng), y = up_to(rng);
        REQUIRE(euclid_gcd(x, y, false).gcd == std::gcd(x, y));
        const std::uint64_t g = rng() % 1000 + 1;
        REQUIRE(euclid_gcd(x / 1000 * g, y / 1000 * g, false).gcd == std::gcd(x / 1000 * g, y / 1000 * g));
    }
}

TEST_CASE("steps scale the interval map") {
    for (std::uint64_t x = 2; x <= 200; ++x) {
        for (std::uint64_t y = 1; y < x; ++y) {
            if (std::gcd(x, y) != 1 || 2 * y == x || 3 * y == x) {
                continue;
            }
            const EuclidState s = euclid_step({x, y});
            REQUIRE(step(Rat(static_cast<long>(y), static_cast<long>(x))).image ==
                    Rat(static_cast<long>(s.y), static_cast<long>(s.x)));
        }
    }
}

TEST_CASE("classic subtractive step") {
    CHECK(classic_subtractive_step(Rat(1, 4)) == Rat(1, 3));
    CHECK(classic_subtractive_step(Rat(3, 4)) == Rat(1, 3));
    CHECK_THROWS_AS(classic_subtractive_step(Rat(1, 2)), DomainError);
    CHECK_THROWS_AS(classic_subtractive_step(Rat(0)), DomainError);
}
