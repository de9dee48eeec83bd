#include <barning/interval_map.hpp>

#include "certified_engine.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace barning {

Rat Mobius::operator()(const Rat &t) const {
    const BigInt num = a * t.num() + b * t.den();
    const BigInt den = c * t.num() + d * t.den();
    if (den == 0) {
        throw DomainError("Mobius map evaluated at its pole");
    }
    return Rat(num, den);
}

Mobius Mobius::compose(const Mobius &o) const {
    return Mobius{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

const std::array<Branch, 3> &branches() {
    static const std::array<Branch, 3> table = {
        Branch{Digit::D1, Rat(0), Rat(1, 3), Mobius{1, 0, -2, 1}, Mobius{1, 0, 2, 1}},
        Branch{Digit::D2, Rat(1, 3), Rat(1, 2), Mobius{-2, 1, 1, 0}, Mobius{0, 1, 1, 2}},
        Branch{Digit::D3, Rat(1, 2), Rat(1), Mobius{2, -1, 1, 0}, Mobius{0, 1, -1, 2}},
    };
    return table;
}

const Branch &branch(Digit d) {
    if (is_terminal(d)) {
        throw DomainError("terminal digits have no branch");
    }
    return branches()[static_cast<std::size_t>(digit_value(d) - 1)];
}

Rat inverse_branch(Digit d, const Rat &u) {
    return branch(d).inverse(u);
}

Surd inverse_branch(Digit d, const Surd &u) {
    const Mobius &m = branch(d).inverse;
    const Rat a(m.a), b(m.b), c(m.c), e(m.d);
    return (u * a + b) / (u * c + e);
}

QPoint to_circle(const Rat &t) {
    if (t < Rat(0) || t > Rat(1)) {
        throw DomainError("to_circle expects 0 <= t <= 1");
    }
    const Rat s = t * t;
    const Rat den = Rat(1) + s;
    return QPoint((Rat(1) - s) / den, Rat(2) * t / den);
}

SurdPoint to_circle(const Surd &t) {
    if (t.compare(Rat(0)) < 0 || t.compare(Rat(1)) > 0) {
        throw DomainError("to_circle expects 0 <= t <= 1");
    }
    const Surd s = t * t;
    const Surd den = s + Rat(1);
    return SurdPoint{(Rat(1) - s) / den, (t * Rat(2)) / den};
}

CircleBox to_circle(const PrecisionInterval &t) {
    const Rat lo = std::max(t.lo(), Rat(0));
    const Rat hi = std::min(t.hi(), Rat(1));
    const QPoint plo = to_circle(lo);
    const QPoint phi = to_circle(hi);
    // x decreases and y increases on [0, 1]
    return CircleBox{phi.x(), plo.x(), plo.y(), phi.y()};
}

Rat from_circle(const QPoint &p) {
    if (p.y().sign() == 0) {
        throw DomainError("from_circle undefined at y = 0");
    }
    return (Rat(1) - p.x()) / p.y();
}

Surd from_circle(const SurdPoint &p) {
    if (p.y.sign() == 0) {
        throw DomainError("from_circle undefined at y = 0");
    }
    return (Rat(1) - p.x) / p.y;
}

StepResult<Rat> step(const Rat &t) {
    if (t <= Rat(0) || t >= Rat(1)) {
        throw DomainError("interval map expects 0 < t < 1, got " + t.to_string());
    }
    if (t == Rat(1, 2)) {
        return {Rat(0), Digit::OE};
    }
    if (t == Rat(1, 3)) {
        return {Rat(1), Digit::EO};
    }
    const Branch &b = branch(branch_digit(t));
    return {b.forward(t), b.label};
}

StepResult<Surd> step(const Surd &t) {
    if (t.is_rational()) {
        throw DomainError("rational value given as a surd");
    }
    if (t.compare(Rat(0)) <= 0 || t.compare(Rat(1)) >= 0) {
        throw DomainError("interval map expects 0 < t < 1, got " + t.to_string());
    }
    Digit d = Digit::D3;
    if (t.compare(Rat(1, 3)) < 0) {
        d = Digit::D1;
    } else if (t.compare(Rat(1, 2)) < 0) {
        d = Digit::D2;
    }
    const Mobius &m = branch(d).forward;
    const Rat a(m.a), b(m.b), c(m.c), e(m.d);
    return {(t * a + b) / (t * c + e), d};
}

IntervalStep step(const PrecisionInterval &t) {
    const Rat lo = std::max(t.lo(), Rat(0));
    const Rat hi = std::min(t.hi(), Rat(1));
    IntervalStep out{std::nullopt, lo, hi};
    std::optional<Digit> d;
    if (hi < Rat(1, 3)) {
        d = Digit::D1;
    } else if (lo > Rat(1, 3) && hi < Rat(1, 2)) {
        d = Digit::D2;
    } else if (lo > Rat(1, 2)) {
        d = Digit::D3;
    }
    if (!d) {
        return out;
    }
    const Mobius &m = branch(*d).forward;
    Rat a = m(lo), b = m(hi);
    if (b < a) {
        std::swap(a, b);
    }
    return IntervalStep{d, a, b};
}

Digit branch_digit(const Rat &t) {
    if (t <= Rat(0) || t >= Rat(1)) {
        throw DomainError("branch_digit expects 0 < t < 1");
    }
    if (t == Rat(1, 2)) {
        return Digit::OE;
    }
    if (t == Rat(1, 3)) {
        return Digit::EO;
    }
    if (t < Rat(1, 3)) {
        return Digit::D1;
    }
    return t < Rat(1, 2) ? Digit::D2 : Digit::D3;
}

UndecidedDigit::UndecidedDigit(std::size_t index, std::size_t bits)
    : std::runtime_error("digit " + std::to_string(index) + " undecided at " + std::to_string(bits) +
                         " bits of precision"),
      index_(index), bits_(bits) {}

namespace detail {

class DigitProducer {
  public:
    virtual ~DigitProducer() = default;
    virtual std::optional<Digit> next() = 0;
    virtual std::size_t bits() const { return 0; }
};

namespace {

class RationalProducer final : public DigitProducer {
  public:
    explicit RationalProducer(Rat t) : t_(std::move(t)) {
        if (t_ <= Rat(0) || t_ >= Rat(1)) {
            throw DomainError("expansion expects 0 < t < 1, got " + t_.to_string());
        }
    }
    std::optional<Digit> next() override {
        if (done_) {
            return std::nullopt;
        }
        auto r = step(t_);
        if (is_terminal(r.digit)) {
            done_ = true;
        }
        t_ = std::move(r.image);
        return r.digit;
    }

  private:
    Rat t_;
    bool done_ = false;
};

class SurdProducer final : public DigitProducer {
  public:
    explicit SurdProducer(Surd t) : t_(std::move(t)) {
        if (t_.compare(Rat(0)) <= 0 || t_.compare(Rat(1)) >= 0) {
            throw DomainError("expansion expects 0 < t < 1, got " + t_.to_string());
        }
    }
    std::optional<Digit> next() override {
        auto r = step(t_);
        t_ = std::move(r.image);
        return r.digit;
    }

  private:
    Surd t_;
};

class IntervalProducer final : public DigitProducer {
  public:
    IntervalProducer(PrecisionInterval t, std::size_t budget, std::size_t initial_bits)
        : point_(std::move(t)), budget_(budget), bits_(std::max<std::size_t>(initial_bits, 8)),
          engine_(point_.with_bits(bits_).enclosure()) {
        if (point_.hi() <= Rat(0) || point_.lo() >= Rat(1)) {
            throw DomainError("expansion expects a point of (0, 1)");
        }
        if (bits_ > budget_) {
            throw UndecidedDigit(0, bits_);
        }
    }

    std::optional<Digit> next() override {
        for (;;) {
            while (!pending_.empty()) {
                detail::DigitRun &run = pending_.front();
                if (skip_ > 0) {
                    const std::uint64_t n = std::min<std::uint64_t>(skip_, run.count);
                    skip_ -= n;
                    run.count -= n;
                    if (run.count == 0) {
                        pending_.pop_front();
                    }
                    continue;
                }
                const Digit d = run.digit;
                if (--run.count == 0) {
                    pending_.pop_front();
                }
                ++emitted_;
                return d;
            }
            scratch_.clear();
            if (engine_.advance(scratch_)) {
                pending_.insert(pending_.end(), scratch_.begin(), scratch_.end());
                continue;
            }
            if (bits_ * 2 > budget_) {
                throw UndecidedDigit(emitted_, bits_);
            }
            bits_ *= 2;
            engine_ = CertifiedEngine(point_.with_bits(bits_).enclosure());
            skip_ = emitted_;
        }
    }

    std::size_t bits() const override { return bits_; }

  private:
    PrecisionInterval point_;
    std::size_t budget_;
    std::size_t bits_;
    CertifiedEngine engine_;
    std::deque<DigitRun> pending_;
    std::vector<DigitRun> scratch_;
    std::uint64_t emitted_ = 0;
    std::uint64_t skip_ = 0;
};

} // namespace
} // namespace detail

DigitStream::DigitStream(Point start, std::size_t precision_budget, std::size_t initial_bits) {
    if (auto *r = std::get_if<Rat>(&start)) {
        producer_ = std::make_unique<detail::RationalProducer>(*r);
    } else if (auto *s = std::get_if<Surd>(&start)) {
        if (s->is_rational()) {
            producer_ = std::make_unique<detail::RationalProducer>(s->rational_value());
        } else {
            producer_ = std::make_unique<detail::SurdProducer>(*s);
        }
    } else {
        producer_ = std::make_unique<detail::IntervalProducer>(std::get<PrecisionInterval>(std::move(start)),
                                                               precision_budget, initial_bits);
    }
}

DigitStream::~DigitStream() = default;
DigitStream::DigitStream(DigitStream &&) noexcept = default;
DigitStream &DigitStream::operator=(DigitStream &&) noexcept = default;

std::optional<Digit> DigitStream::next() {
    auto d = producer_->next();
    if (d) {
        ++position_;
    }
    return d;
}

std::size_t DigitStream::bits_in_use() const {
    return producer_->bits();
}

Expansion expand(const Point &t, const ExpandOptions &options) {
    DigitStream stream(t, options.precision_budget, options.initial_bits);
    DigitWord digits;
    while (digits.size() < options.max_digits) {
        auto d = stream.next();
        if (!d) {
            break;
        }
        if (is_terminal(*d)) {
            return Expansion::finite(std::move(digits), *d);
        }
        digits.push_back(*d);
    }
    return Expansion::prefix(std::move(digits));
}

namespace {

Mobius word_matrix(const DigitWord &digits) {
    Mobius m;
    for (Digit d : digits) {
        m = m.compose(branch(d).inverse);
    }
    return m;
}

} // namespace

CylinderInterval cylinder(const DigitWord &digits) {
    const Mobius m = word_matrix(digits);
    Rat a = m(Rat(0)), b = m(Rat(1));
    if (b < a) {
        std::swap(a, b);
    }
    return CylinderInterval{digits, a, b};
}

DigitSource periodic_source(DigitWord word) {
    if (word.empty()) {
        throw DomainError("periodic word must be non-empty");
    }
    for (Digit d : word) {
        if (is_terminal(d)) {
            throw DomainError("periodic word must use digits 1, 2, 3");
        }
    }
    return [word = std::move(word)](std::size_t i) -> std::optional<Digit> { return word[i % word.size()]; };
}

namespace {

// Shortest cylinder of the stream with width <= width.
std::pair<Rat, Rat> converge(const DigitSource &source, const Rat &width, std::size_t max_digits) {
    Mobius m;
    for (std::size_t i = 0;; ++i) {
        Rat a = m(Rat(0)), b = m(Rat(1));
        if (b < a) {
            std::swap(a, b);
        }
        if (b - a <= width) {
            return {a, b};
        }
        if (i >= max_digits) {
            throw DomainError("expansion did not converge within " + std::to_string(max_digits) + " digits");
        }
        const auto d = source(i);
        if (!d || is_terminal(*d)) {
            throw DomainError("digit source ended; use decode for finite expansions");
        }
        m = m.compose(branch(*d).inverse);
    }
}

DyadicInterval dyadic_cover(const Rat &lo, const Rat &hi, std::size_t bits) {
    BigInt scale = 1;
    scale <<= bits;
    return DyadicInterval{floor_div(lo.num() * scale, lo.den()), ceil_div(hi.num() * scale, hi.den()), bits};
}

} // namespace

PrecisionInterval point_from_infinite_expansion(DigitSource source, const Rat &tolerance, std::size_t max_digits) {
    if (tolerance <= Rat(0)) {
        throw DomainError("tolerance must be positive");
    }
    // dyadic rounding adds up to two units, so aim for width <= tolerance / 4
    std::size_t bits = 2;
    while (Rat(1) / Rat(BigInt(BigInt(1) << bits)) > tolerance) {
        ++bits;
    }
    bits += 2;
    Refiner refiner = [source = std::move(source), max_digits](std::size_t b) {
        const Rat width = Rat(1) / Rat(BigInt(BigInt(1) << b));
        auto [l, h] = converge(source, width, max_digits);
        return dyadic_cover(l, h, b);
    };
    return PrecisionInterval("expansion", std::move(refiner), bits);
}

} // namespace barning
