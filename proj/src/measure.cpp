#include <barning/measure.hpp>

#include "mpfr_value.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace barning {

namespace {

double log_of(const BigInt &v) {
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_of(const Rat &r) {
    return log_of(r.num()) - log_of(r.den());
}

} // namespace

double NuMeasure::value() const {
    if (infinite) {
        return std::numeric_limits<double>::infinity();
    }
    return log_of(log_argument) / std::numbers::sqrt2;
}

NuMeasure operator+(const NuMeasure &a, const NuMeasure &b) {
    if (a.infinite || b.infinite) {
        return NuMeasure::infinity();
    }
    return NuMeasure{false, a.log_argument * b.log_argument};
}

double nu_density(double t) {
    return 1.0 / (std::numbers::sqrt2 * t * (1.0 - t));
}

NuMeasure nu_interval(const Rat &a, const Rat &b) {
    if (a < Rat(0) || b > Rat(1)) {
        throw DomainError("nu_interval expects 0 <= a < b <= 1");
    }
    if (a >= b) {
        throw DomainError("nu_interval expects a < b");
    }
    if (a.sign() == 0 || b == Rat(1)) {
        return NuMeasure::infinity();
    }
    return NuMeasure{false, b * (Rat(1) - a) / (a * (Rat(1) - b))};
}

NuMeasure cylinder_measure(const DigitWord &digits) {
    if (digits.empty()) {
        throw DomainError("cylinder_measure expects a non-empty word");
    }
    const CylinderInterval c = cylinder(digits);
    return nu_interval(c.lo, c.hi);
}

double measure_ratio(const NuMeasure &a, const NuMeasure &b) {
    if (a.infinite || b.infinite) {
        throw DomainError("measure_ratio needs finite measures");
    }
    return log_of(a.log_argument) / log_of(b.log_argument);
}

std::string to_string(HopfStatus status) {
    switch (status) {
    case HopfStatus::Ok:
        return "ok";
    case HopfStatus::ZeroNumerator:
        return "zero-numerator";
    case HopfStatus::ZeroDenominator:
        return "zero-denominator";
    }
    return "?";
}

HopfResult hopf_ratio(const Point &start, const DigitWord &numerator, const DigitWord &denominator,
                      std::uint64_t steps, std::size_t precision_budget) {
    for (const DigitWord *w : {&numerator, &denominator}) {
        if (w->empty() || w->size() > 31) {
            throw DomainError("hopf_ratio words must have 1 to 31 digits");
        }
        if (cylinder_measure(*w).infinite) {
            throw DomainError("hopf_ratio words must have finite cylinder measure");
        }
    }
    const auto pack = [](const DigitWord &w) {
        std::uint64_t v = 0;
        for (Digit d : w) {
            v = (v << 2) | static_cast<std::uint64_t>(digit_value(d));
        }
        return v;
    };
    const auto mask = [](std::size_t len) { return len >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * len)) - 1; };
    const std::uint64_t num_key = pack(numerator), den_key = pack(denominator);
    const std::uint64_t num_mask = mask(numerator.size()), den_mask = mask(denominator.size());

    HopfResult out;
    DigitStream stream(start, precision_budget);
    std::uint64_t window = 0;
    for (std::uint64_t i = 0; i < steps; ++i) {
        const auto d = stream.next();
        if (!d || is_terminal(*d)) {
            break;
        }
        window = (window << 2) | static_cast<std::uint64_t>(digit_value(*d));
        ++out.steps;
        if (out.steps >= numerator.size() && (window & num_mask) == num_key) {
            ++out.numerator_count;
        }
        if (out.steps >= denominator.size() && (window & den_mask) == den_key) {
            ++out.denominator_count;
        }
    }
    if (out.denominator_count == 0) {
        out.status = HopfStatus::ZeroDenominator;
    } else {
        out.ratio = static_cast<double>(out.numerator_count) / static_cast<double>(out.denominator_count);
        if (out.numerator_count == 0) {
            out.status = HopfStatus::ZeroNumerator;
        }
    }
    return out;
}

InvarianceEquation invariance_equation() {
    InvarianceEquation eq;
    for (std::size_t i = 0; i < 3; ++i) {
        const Mobius &inv = branches()[i].inverse;
        // unimodular, so |F'(t)| = 1/(c t + d)^2
        eq[i] = InvarianceTerm{inv, inv.c, inv.d};
    }
    return eq;
}

Rat invariance_residual(const RationalDensity &f, const Rat &t, const InvarianceEquation &equation) {
    if (t <= Rat(0) || t >= Rat(1)) {
        throw DomainError("invariance_residual expects 0 < t < 1");
    }
    Rat rhs(0);
    for (const InvarianceTerm &term : equation) {
        const Rat jac = Rat(term.jacobian_c) * t + Rat(term.jacobian_d);
        rhs += f(term.preimage(t)) / (jac * jac);
    }
    return (rhs - f(t)).abs();
}

double pushforward_check(const Rat &t) {
    if (t <= Rat(0) || t >= Rat(1)) {
        throw DomainError("pushforward_check expects 0 < t < 1");
    }
    constexpr mpfr_prec_t prec = 256;
    using detail::Mpfr;
    Mpfr tv(prec), x(prec), y(prec), one_minus_x(prec), one_minus_y(prec), tmp(prec), lhs(prec), rhs(prec), s(prec);
    mpfr_set_q(tv.get(), t.raw().get_mpq_t(), MPFR_RNDN);
    // s = 1 + t^2
    mpfr_sqr(s.get(), tv.get(), MPFR_RNDN);
    mpfr_add_ui(s.get(), s.get(), 1, MPFR_RNDN);
    // x = (1 - t^2)/(1 + t^2), y = 2t/(1 + t^2)
    mpfr_sqr(tmp.get(), tv.get(), MPFR_RNDN);
    mpfr_ui_sub(x.get(), 1, tmp.get(), MPFR_RNDN);
    mpfr_div(x.get(), x.get(), s.get(), MPFR_RNDN);
    mpfr_mul_ui(y.get(), tv.get(), 2, MPFR_RNDN);
    mpfr_div(y.get(), y.get(), s.get(), MPFR_RNDN);
    mpfr_ui_sub(one_minus_x.get(), 1, x.get(), MPFR_RNDN);
    mpfr_ui_sub(one_minus_y.get(), 1, y.get(), MPFR_RNDN);
    // rhs = 2 / ((1 + t^2) sqrt((1-x)(1-y)))
    mpfr_mul(tmp.get(), one_minus_x.get(), one_minus_y.get(), MPFR_RNDN);
    mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), tmp.get(), s.get(), MPFR_RNDN);
    mpfr_ui_div(rhs.get(), 2, tmp.get(), MPFR_RNDN);
    // lhs = 1 / (sqrt2 t (1-t))
    mpfr_ui_sub(tmp.get(), 1, tv.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), tmp.get(), tv.get(), MPFR_RNDN);
    mpfr_sqrt_ui(lhs.get(), 2, MPFR_RNDN);
    mpfr_mul(tmp.get(), tmp.get(), lhs.get(), MPFR_RNDN);
    mpfr_ui_div(lhs.get(), 1, tmp.get(), MPFR_RNDN);
    mpfr_sub(tmp.get(), lhs.get(), rhs.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), tmp.get(), MPFR_RNDN);
    return mpfr_get_d(tmp.get(), MPFR_RNDN);
}

bool in_inducing_set(const Rat &t) {
    return Rat(1, 5) < t && t < Rat(2, 3);
}

bool inducing_set_by_digits(Digit first, Digit second) {
    switch (first) {
    case Digit::D2:
        return true;
    case Digit::D1:
        return second == Digit::D2 || second == Digit::D3;
    case Digit::D3:
        return second == Digit::D1 || second == Digit::D2;
    default:
        throw DomainError("inducing_set_by_digits expects plain digits");
    }
}

std::uint64_t return_time_J(const Point &t, std::uint64_t horizon) {
    if (const Rat *r = std::get_if<Rat>(&t)) {
        Rat u = *r;
        for (std::uint64_t n = 1; n <= horizon; ++n) {
            const auto s = step(u);
            if (is_terminal(s.digit)) {
                throw DomainError("orbit of " + r->to_string() + " terminates before entering J");
            }
            u = s.image;
            if (in_inducing_set(u)) {
                return n;
            }
        }
        throw HorizonExceeded("return time exceeds horizon " + std::to_string(horizon));
    }
    DigitStream stream(t);
    const auto next_plain = [&stream] {
        const auto d = stream.next();
        if (!d || is_terminal(*d)) {
            throw DomainError("expansion terminated");
        }
        return *d;
    };
    next_plain();
    Digit first = next_plain();
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        if (first == Digit::D2) {
            return n;
        }
        const Digit second = next_plain();
        if (inducing_set_by_digits(first, second)) {
            return n;
        }
        first = second;
    }
    throw HorizonExceeded("return time exceeds horizon " + std::to_string(horizon));
}

std::vector<DigitBlock> block_reexpand(const DigitWord &digits) {
    std::vector<DigitBlock> blocks;
    DigitBlock current;
    for (Digit d : digits) {
        if (is_terminal(d)) {
            throw DomainError("block_reexpand expects digits 1, 2, 3");
        }
        current.digits.push_back(d);
        if (d == Digit::D2) {
            blocks.push_back(std::move(current));
            current = DigitBlock{};
        }
    }
    if (!current.digits.empty()) {
        current.complete = false;
        blocks.push_back(std::move(current));
    }
    return blocks;
}

std::string blocks_to_string(const std::vector<DigitBlock> &blocks) {
    std::string out = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += word_to_string(blocks[i].digits);
        if (!blocks[i].complete) {
            out += "*";
        }
    }
    return out + ")";
}

} // namespace barning
