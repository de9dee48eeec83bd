#pragma once

// Brute-force reference implementations shared by the unit tests. None of
// these go through the library's tree, codec or interval-map code.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Leg = std::tuple<long, long, long>;

// Every PPT with c <= max_c, by scanning legs.
inline std::set<Leg> ppt_by_leg_scan(long max_c) {
    std::set<Leg> out;
    for (long a = 1; a <= max_c; ++a) {
        for (long b = 1; a * a + b * b <= max_c * max_c; ++b) {
            const long c2 = a * a + b * b;
            const long c = std::lround(std::sqrt(static_cast<double>(c2)));
            if (c * c == c2 && std::gcd(a, b) == 1) {
                out.emplace(a, b, c);
            }
        }
    }
    return out;
}

// Forward interval map on doubles, straight from the three branch formulas.
inline double tmap(double t) {
    if (t < 1.0 / 3.0) {
        return t / (1.0 - 2.0 * t);
    }
    if (t < 0.5) {
        return 1.0 / t - 2.0;
    }
    return 2.0 - 1.0 / t;
}

inline int tdigit(double t) {
    return t < 1.0 / 3.0 ? 1 : (t < 0.5 ? 2 : 3);
}

} // namespace oracle
