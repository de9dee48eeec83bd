#include <barning/precision.hpp>

#include "mpfr_value.hpp"

#include <barning/surd.hpp>

#include <mpfr.h>

#include <stdexcept>

namespace barning {

namespace {

using detail::Mpfr;

// floor or ceil of value * 2^bits.
BigInt scaled_integer(mpfr_ptr value, std::size_t bits, mpfr_rnd_t direction) {
    mpfr_mul_2ui(value, value, static_cast<unsigned long>(bits), MPFR_RNDN); // exact
    BigInt out;
    mpfr_get_z(out.get_mpz_t(), value, direction);
    return out;
}

mpfr_prec_t working_precision(std::size_t bits) {
    return static_cast<mpfr_prec_t>(bits + 64);
}

} // namespace

Rat DyadicInterval::lo_rat() const {
    BigInt den = 1;
    den <<= bits;
    return Rat(lo, den);
}

Rat DyadicInterval::hi_rat() const {
    BigInt den = 1;
    den <<= bits;
    return Rat(hi, den);
}

double DyadicInterval::midpoint_double() const {
    mpq_class mid(BigInt(lo + hi));
    BigInt den = 1;
    den <<= (bits + 1);
    mid /= mpq_class(den);
    return mid.get_d();
}

DyadicInterval DyadicInterval::rescaled(std::size_t new_bits) const {
    if (new_bits < bits) {
        throw std::logic_error("DyadicInterval::rescaled cannot drop bits");
    }
    const auto shift = static_cast<mp_bitcnt_t>(new_bits - bits);
    return DyadicInterval{BigInt(lo << shift), BigInt(hi << shift), new_bits};
}

DyadicInterval intersect(const DyadicInterval &a, const DyadicInterval &b) {
    const std::size_t bits = std::max(a.bits, b.bits);
    const DyadicInterval x = a.rescaled(bits);
    const DyadicInterval y = b.rescaled(bits);
    DyadicInterval out{x.lo > y.lo ? x.lo : y.lo, x.hi < y.hi ? x.hi : y.hi, bits};
    if (out.lo > out.hi) {
        throw std::logic_error("disjoint enclosures of the same number");
    }
    return out;
}

PrecisionInterval::PrecisionInterval(std::string label, Refiner refiner, std::size_t bits)
    : label_(std::move(label)), refiner_(std::make_shared<const Refiner>(std::move(refiner))) {
    enclosure_ = (*refiner_)(bits);
}

PrecisionInterval::PrecisionInterval(std::string label, std::shared_ptr<const Refiner> refiner,
                                     DyadicInterval enclosure)
    : label_(std::move(label)), refiner_(std::move(refiner)), enclosure_(std::move(enclosure)) {}

PrecisionInterval PrecisionInterval::refine() const {
    const Rat old_width = enclosure_.width();
    std::size_t bits = enclosure_.bits;
    for (int attempt = 0; attempt < 64; ++attempt) {
        bits *= 2;
        DyadicInterval next = intersect(enclosure_, (*refiner_)(bits));
        if (next.width() < old_width) {
            return PrecisionInterval(label_, refiner_, std::move(next));
        }
    }
    throw std::runtime_error("refiner for " + label_ + " does not converge");
}

PrecisionInterval PrecisionInterval::with_bits(std::size_t bits) const {
    return PrecisionInterval(label_, refiner_, (*refiner_)(bits));
}

PrecisionInterval enclose_rational(const Rat &value, std::size_t bits) {
    return PrecisionInterval(
        "rat:" + value.to_string(),
        [value](std::size_t b) {
            BigInt scale = 1;
            scale <<= b;
            const BigInt n = value.num() * scale;
            return DyadicInterval{floor_div(n, value.den()), ceil_div(n, value.den()), b};
        },
        bits);
}

PrecisionInterval enclose_surd(const Surd &value, std::size_t bits) {
    return PrecisionInterval(
        "surd:" + value.to_string(), [value](std::size_t b) { return value.enclose(b); }, bits);
}

PrecisionInterval enclose_tan(const Rat &argument, std::size_t bits) {
    if (argument.sign() <= 0 || argument >= Rat(3, 2)) {
        throw DomainError("enclose_tan needs 0 < x < 3/2");
    }
    return PrecisionInterval(
        "tan(" + argument.to_string() + ")",
        [argument](std::size_t b) {
            const mpfr_prec_t prec = working_precision(b);
            Mpfr lo(prec), hi(prec);
            // tan is increasing on (0, pi/2): round the argument outward, then tan outward.
            mpfr_set_q(lo.get(), argument.raw().get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(hi.get(), argument.raw().get_mpq_t(), MPFR_RNDU);
            mpfr_tan(lo.get(), lo.get(), MPFR_RNDD);
            mpfr_tan(hi.get(), hi.get(), MPFR_RNDU);
            return DyadicInterval{scaled_integer(lo.get(), b, MPFR_RNDD), scaled_integer(hi.get(), b, MPFR_RNDU), b};
        },
        bits);
}

PrecisionInterval enclose_tan_half_recip_pi(std::size_t bits) {
    return PrecisionInterval(
        "tan(1/(2pi))",
        [](std::size_t b) {
            const mpfr_prec_t prec = working_precision(b);
            Mpfr pi_lo(prec), pi_hi(prec), lo(prec), hi(prec);
            mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
            mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
            // 1/(2 pi): the large pi gives the small argument.
            mpfr_mul_2ui(pi_hi.get(), pi_hi.get(), 1, MPFR_RNDU);
            mpfr_mul_2ui(pi_lo.get(), pi_lo.get(), 1, MPFR_RNDD);
            mpfr_ui_div(lo.get(), 1, pi_hi.get(), MPFR_RNDD);
            mpfr_ui_div(hi.get(), 1, pi_lo.get(), MPFR_RNDU);
            mpfr_tan(lo.get(), lo.get(), MPFR_RNDD);
            mpfr_tan(hi.get(), hi.get(), MPFR_RNDU);
            return DyadicInterval{scaled_integer(lo.get(), b, MPFR_RNDD), scaled_integer(hi.get(), b, MPFR_RNDU), b};
        },
        bits);
}

} // namespace barning
