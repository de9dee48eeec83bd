#pragma once

#include <barning/bigint.hpp>
#include <barning/rat.hpp>

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

namespace barning {

class Surd;

// Closed interval [lo/2^bits, hi/2^bits] with integer lo <= hi.
struct DyadicInterval {
    BigInt lo;
    BigInt hi;
    std::size_t bits = 0;

    Rat lo_rat() const;
    Rat hi_rat() const;
    Rat width() const { return hi_rat() - lo_rat(); }
    bool contains(const Rat &value) const { return lo_rat() <= value && value <= hi_rat(); }
    double midpoint_double() const;
    // Same interval expressed with more fractional bits.
    DyadicInterval rescaled(std::size_t new_bits) const;
};

DyadicInterval intersect(const DyadicInterval &a, const DyadicInterval &b);

// Produces an enclosure of one fixed real number with `bits` fractional bits.
// Must be valid for every bits value and get tighter as bits grows.
using Refiner = std::function<DyadicInterval(std::size_t bits)>;

// A real number known through refinable dyadic enclosures.
class PrecisionInterval {
  public:
    PrecisionInterval(std::string label, Refiner refiner, std::size_t bits = 64);

    const std::string &label() const { return label_; }
    const DyadicInterval &enclosure() const { return enclosure_; }
    std::size_t bits() const { return enclosure_.bits; }
    Rat lo() const { return enclosure_.lo_rat(); }
    Rat hi() const { return enclosure_.hi_rat(); }

    // Doubles the precision; the result is strictly narrower and nested.
    PrecisionInterval refine() const;
    // Fresh enclosure at the given precision (not necessarily nested in this one).
    PrecisionInterval with_bits(std::size_t bits) const;

  private:
    PrecisionInterval(std::string label, std::shared_ptr<const Refiner> refiner, DyadicInterval enclosure);

    std::string label_;
    std::shared_ptr<const Refiner> refiner_;
    DyadicInterval enclosure_;
};

PrecisionInterval enclose_rational(const Rat &value, std::size_t bits = 64);
PrecisionInterval enclose_surd(const Surd &value, std::size_t bits = 64);
// tan(x) for rational 0 < x < pi/2.
PrecisionInterval enclose_tan(const Rat &argument, std::size_t bits = 64);
// tan(1/(2 pi)), the preimage of (cos(1/pi), sin(1/pi)) in (0,1).
PrecisionInterval enclose_tan_half_recip_pi(std::size_t bits = 64);

} // namespace barning
