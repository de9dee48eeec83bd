#pragma once

#include <barning/rat.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace barning {

struct EuclidState {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    // (a, a) or (a, 0)
    bool is_terminal() const { return x == y || y == 0; }
    std::string to_string() const;
    friend bool operator==(const EuclidState &, const EuclidState &) = default;
};

// One step of the modified subtractive algorithm on x > y > 0:
//   (x-2y, y) if x-2y > y,  (y, x-2y) if 0 < x-2y <= y,  (y, 2y-x) otherwise.
EuclidState euclid_step(const EuclidState &s);

struct EuclidResult {
    std::uint64_t gcd = 0;
    std::uint64_t steps = 0;
    std::vector<EuclidState> trace; // input state through the terminal state, if recorded
};

// Runs euclid_step to the first terminal state. Pairs with y > x are swapped.
EuclidResult euclid_gcd(std::uint64_t x, std::uint64_t y, bool record_trace = true);

// "(155,100) -> (100,45) -> ..." as printed by the CLI.
std::string format_trace(const std::vector<EuclidState> &trace);

// Classical scaled subtractive map: t/(1-t) below 1/2, (1-t)/t above.
Rat classic_subtractive_step(const Rat &t);

} // namespace barning
