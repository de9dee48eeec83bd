#pragma once

#include <barning/interval_map.hpp>
#include <barning/rat.hpp>
#include <barning/types.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace barning {

// Value (1/sqrt2) * ln(log_argument) of the invariant measure nu, or +infinity.
// Sums multiply log arguments, so additivity checks stay exact.
struct NuMeasure {
    bool infinite = false;
    Rat log_argument = Rat(1);

    static NuMeasure infinity() { return NuMeasure{true, Rat(1)}; }
    double value() const;

    friend NuMeasure operator+(const NuMeasure &a, const NuMeasure &b);
    friend bool operator==(const NuMeasure &, const NuMeasure &) = default;
};

// nu density (1/sqrt2) / (t(1-t)).
double nu_density(double t);

// nu((a, b)) for 0 <= a < b <= 1.
NuMeasure nu_interval(const Rat &a, const Rat &b);

// nu of the cylinder of a word; infinite exactly for all-1 and all-3 words.
NuMeasure cylinder_measure(const DigitWord &digits);

// Ratio of two finite measures, ln(arg_a) / ln(arg_b).
double measure_ratio(const NuMeasure &a, const NuMeasure &b);

enum class HopfStatus { Ok, ZeroNumerator, ZeroDenominator };

struct HopfResult {
    std::uint64_t steps = 0;
    std::uint64_t numerator_count = 0;
    std::uint64_t denominator_count = 0;
    std::optional<double> ratio; // empty when the denominator count is zero
    HopfStatus status = HopfStatus::Ok;
};

// Overlapping occurrence counts of two words along the first `steps` certified
// digits of a point, and their ratio.
HopfResult hopf_ratio(const Point &start, const DigitWord &numerator, const DigitWord &denominator,
                      std::uint64_t steps, std::size_t precision_budget = std::size_t{1} << 25);

std::string to_string(HopfStatus status);

// One term f(P(t)) / (c t + d)^2 of the invariance equation.
struct InvarianceTerm {
    Mobius preimage;
    BigInt jacobian_c;
    BigInt jacobian_d;
};
using InvarianceEquation = std::array<InvarianceTerm, 3>;

// f(t) = sum f(F_d(t)) |F_d'(t)|, built from the inverse branches.
InvarianceEquation invariance_equation();

using RationalDensity = std::function<Rat(const Rat &)>;

// Exact |RHS - LHS| of the invariance equation at t.
Rat invariance_residual(const RationalDensity &f, const Rat &t,
                        const InvarianceEquation &equation = invariance_equation());

// |(1/sqrt2)/(t(1-t)) - 2/((1+t^2) sqrt((1-x)(1-y)))| at (x, y) = D(t), in 256-bit arithmetic.
double pushforward_check(const Rat &t);

// Inducing set J = (1/5, 2/3).
bool in_inducing_set(const Rat &t);

// J as a union of cylinders: digit 2, 1 followed by 2 or 3, or 3 followed by 1 or 2.
bool inducing_set_by_digits(Digit first, Digit second);

class HorizonExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// First n >= 1 with T^n(t) in J. Rationals are iterated exactly; other points
// use certified digits and the cylinder description of J.
std::uint64_t return_time_J(const Point &t, std::uint64_t horizon = 1'000'000);

struct DigitBlock {
    DigitWord digits;
    bool complete = true; // ends in a 2
};

// Splits a digit sequence after every 2; a trailing block without 2 is incomplete.
std::vector<DigitBlock> block_reexpand(const DigitWord &digits);

std::string blocks_to_string(const std::vector<DigitBlock> &blocks);

} // namespace barning
