#pragma once

#include <barning/interval_map.hpp>
#include <barning/surd.hpp>
#include <barning/types.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace barning {

struct PeriodicityReport {
    std::size_t preperiod = 0;
    std::size_t period = 0;
    DigitWord word;           // repeating block
    std::vector<Surd> states; // orbit up to and including the first repeated state's predecessor
};

inline constexpr std::size_t default_period_horizon = 100'000;

// Exact orbit of a quadratic irrational under the interval map, stopped at the
// first repeated state. Empty when no repeat occurs within the horizon.
std::optional<PeriodicityReport> detect_period(const Surd &start, std::size_t horizon = default_period_horizon);

// Fixed point in (0,1) of F_{w1} o ... o F_{wn}: the point whose expansion is w repeated.
Surd periodic_point(const DigitWord &word);

// [1^n : oe] in closed form, (4(n+1)^2 - 1, 4(n+1), 4(n+1)^2 + 1).
Triple family_ones(unsigned n);

// [2^n : oe] from the recurrences c_{k+1} = 6c_k - c_{k-1} (5, 29, ...) and
// s_{k+1} = 6s_k - s_{k-1} (7, 41, ...), a = (s - (-1)^n)/2, b = a + (-1)^n.
Triple family_twos(unsigned n);

enum class CosPattern {
    Cos1,    // tan(1/2): 3, then blocks 1^(2j) 3 for j = 1..k
    CosHalf, // tan(1/4): blocks 1^(4j+1) 3 for j = 0..k-1
};

DigitWord cos_pattern_prefix(CosPattern which, std::size_t k_blocks);
Point cos_pattern_point(CosPattern which);

struct PatternCheck {
    bool pass = false;
    DigitWord expected;
    DigitWord observed;
};

// Certified expansion of the point compared against the predicted run-length pattern.
PatternCheck verify_cos_patterns(CosPattern which, std::size_t k_blocks,
                                 std::size_t precision_budget = default_precision_budget);

struct ContinuedFractionCheck {
    std::size_t k = 0;
    Rat approximant;                     // F3 F1^2 F3 F1^4 ... F3 F1^(2k) (1)
    std::vector<BigInt> expected_terms;  // [0; 1, 1, 4, 1, 8, ..., 1, 4k]
    std::vector<BigInt> observed_terms;
    bool tan_half_in_cylinder = false;
    bool pass = false;
};

// Cross-check of the tan(1/2) pattern against the continued fraction of tan(1/2).
ContinuedFractionCheck tan_half_cf_crosscheck(std::size_t k);

// Regular continued fraction of a positive rational (last term > 1 unless the value is 1).
std::vector<BigInt> continued_fraction(const Rat &value);

} // namespace barning
