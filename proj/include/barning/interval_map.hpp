#pragma once

#include <barning/precision.hpp>
#include <barning/rat.hpp>
#include <barning/surd.hpp>
#include <barning/types.hpp>

#include <array>
#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <variant>

namespace barning {

// Integer Mobius map t -> (a t + b) / (c t + d).
struct Mobius {
    BigInt a = 1, b = 0, c = 0, d = 1;

    Rat operator()(const Rat &t) const;
    // (*this) o other
    Mobius compose(const Mobius &other) const;
};

// One branch of the interval map: forward map on (lower, upper) and its
// inverse F_label : (0,1) -> (lower, upper).
//   F1(t) = t/(1+2t),  F2(t) = 1/(2+t),  F3(t) = 1/(2-t)
struct Branch {
    Digit label;
    Rat lower;
    Rat upper;
    Mobius forward;
    Mobius inverse;
};

const std::array<Branch, 3> &branches();
const Branch &branch(Digit d);

Rat inverse_branch(Digit d, const Rat &u);
Surd inverse_branch(Digit d, const Surd &u);

// Point of the circle with coordinates in Q(sqrt(D)).
struct SurdPoint {
    Surd x;
    Surd y;
};

// Rational box enclosing the image of an interval under D.
struct CircleBox {
    Rat x_lo, x_hi, y_lo, y_hi;
};

// D(t) = ((1-t^2)/(1+t^2), 2t/(1+t^2)) for 0 < t < 1.
QPoint to_circle(const Rat &t);
SurdPoint to_circle(const Surd &t);
CircleBox to_circle(const PrecisionInterval &t);

// D^{-1}(x,y) = (1-x)/y.
Rat from_circle(const QPoint &p);
Surd from_circle(const SurdPoint &p);

template <typename Value> struct StepResult {
    Value image;
    Digit digit;
};

// One application of the interval map. For rationals t = 1/2 reports OE with
// image 0 and t = 1/3 reports EO with image 1 (the D-preimages of the roots).
StepResult<Rat> step(const Rat &t);
StepResult<Surd> step(const Surd &t);

struct IntervalStep {
    std::optional<Digit> digit; // empty when the enclosure straddles 1/3 or 1/2
    Rat image_lo;
    Rat image_hi;
    bool needs_refinement() const { return !digit.has_value(); }
};
IntervalStep step(const PrecisionInterval &t);

// Digit of the branch containing a rational (OE at 1/2, EO at 1/3).
Digit branch_digit(const Rat &t);

using Point = std::variant<Rat, Surd, PrecisionInterval>;

// Raised when the precision budget runs out before a digit is certified.
class UndecidedDigit : public std::runtime_error {
  public:
    UndecidedDigit(std::size_t index, std::size_t bits);
    std::size_t index() const { return index_; }
    std::size_t bits() const { return bits_; }

  private:
    std::size_t index_;
    std::size_t bits_;
};

inline constexpr std::size_t default_precision_budget = std::size_t{1} << 16;
inline constexpr std::size_t default_initial_bits = 64;

namespace detail {
class DigitProducer;
}

// Streaming certified digits of a point. Rationals end with OE/EO; surds are
// stepped exactly; precision intervals are refined (bits doubled) whenever the
// enclosure straddles a branch boundary, up to the budget.
class DigitStream {
  public:
    explicit DigitStream(Point start, std::size_t precision_budget = default_precision_budget,
                         std::size_t initial_bits = default_initial_bits);
    ~DigitStream();
    DigitStream(DigitStream &&) noexcept;
    DigitStream &operator=(DigitStream &&) noexcept;

    // Next digit; empty once a finite expansion has emitted its terminal.
    std::optional<Digit> next();
    // Number of digits emitted so far.
    std::size_t position() const { return position_; }
    // Precision of the enclosure currently in use (0 for exact inputs).
    std::size_t bits_in_use() const;

  private:
    std::unique_ptr<detail::DigitProducer> producer_;
    std::size_t position_ = 0;
};

struct ExpandOptions {
    std::size_t max_digits = 64;
    std::size_t precision_budget = default_precision_budget;
    std::size_t initial_bits = default_initial_bits;
};

// Rationals: the full finite expansion (or its first max_digits digits as a
// prefix). Surds and intervals: the first max_digits certified digits.
Expansion expand(const Point &t, const ExpandOptions &options = {});

struct CylinderInterval {
    DigitWord digits;
    Rat lo;
    Rat hi;
};

// F_{d1} o ... o F_{dn} ((0,1)) as an exact open interval.
CylinderInterval cylinder(const DigitWord &digits);

// Digit at a given index of an infinite stream, or empty if the stream ends.
using DigitSource = std::function<std::optional<Digit>(std::size_t index)>;

// Periodic stream repeating `word` forever.
DigitSource periodic_source(DigitWord word);

// Nested-cylinder enclosure of the point with the given expansion, of width
// at most `tolerance`. Refining the result consumes more digits.
PrecisionInterval point_from_infinite_expansion(DigitSource source, const Rat &tolerance,
                                                std::size_t max_digits = std::size_t{1} << 22);

} // namespace barning
