#include "certified_engine.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace barning::detail {

namespace {

using i128 = __int128;

constexpr i128 matrix_limit = i128{1} << 62;

i128 ceil_div_positive(i128 a, i128 b) {
    return (a + b - 1) / b;
}

std::uint64_t cap_run(i128 k) {
    return k > static_cast<i128>(max_run_per_step) ? max_run_per_step : static_cast<std::uint64_t>(k);
}

std::uint64_t cap_run(const BigInt &k) {
    return k > static_cast<unsigned long>(max_run_per_step) ? max_run_per_step : k.get_ui();
}

i128 ceil_positive(const i128 &a, const i128 &b) {
    return ceil_div_positive(a, b);
}

BigInt ceil_positive(const BigInt &a, const BigInt &b) {
    return ceil_div(a, b);
}

// Number of consecutive 1s from p/q < 1/3: 1/t drops by 2 per step, the run
// lasts while 1/t > 3.
template <typename Int> std::uint64_t run_of_ones(const Int &p, const Int &q) {
    if (p == 0) {
        return max_run_per_step;
    }
    return cap_run(ceil_positive(Int(q - 3 * p), Int(2 * p)));
}

// Number of consecutive 3s from p/q > 1/2: 1/(1-t) drops by 1 per step, the
// run lasts while 1/(1-t) > 2.
template <typename Int> std::uint64_t run_of_threes(const Int &p, const Int &q) {
    const Int e = q - p;
    if (e == 0) {
        return max_run_per_step;
    }
    return cap_run(ceil_positive(Int(2 * p - q), e));
}

struct Decision {
    Digit digit;
    std::uint64_t count;
};

// Branch shared by every point of [pl/ql, ph/qh], with the certified run length.
template <typename Int>
std::optional<Decision> decide(const Int &pl, const Int &ql, const Int &ph, const Int &qh) {
    if (pl < 0 || ql <= 0 || qh <= 0 || ph > qh) {
        return std::nullopt;
    }
    if (3 * ph < qh) {
        return Decision{Digit::D1, std::min(run_of_ones(pl, ql), run_of_ones(ph, qh))};
    }
    if (3 * pl > ql && 2 * ph < qh) {
        return Decision{Digit::D2, 1};
    }
    if (2 * pl > ql) {
        return Decision{Digit::D3, std::min(run_of_threes(pl, ql), run_of_threes(ph, qh))};
    }
    return std::nullopt;
}

template <typename Int> void apply(Digit digit, std::uint64_t count, Int &p, Int &q) {
    switch (digit) {
    case Digit::D1:
        q -= Int(2) * Int(count) * p;
        break;
    case Digit::D2: {
        Int np = q - 2 * p;
        q = p;
        p = std::move(np);
        break;
    }
    case Digit::D3: {
        const Int step = Int(count) * Int(q - p);
        p -= step;
        q -= step;
        break;
    }
    default:
        break;
    }
}

i128 top_bits(const BigInt &v, std::size_t shift) {
    BigInt t = v >> static_cast<mp_bitcnt_t>(shift);
    return static_cast<i128>(t.get_ui());
}

} // namespace

CertifiedEngine::CertifiedEngine(const DyadicInterval &enclosure) {
    BigInt den = 1;
    den <<= enclosure.bits;
    plo_ = enclosure.lo < 0 ? BigInt(0) : enclosure.lo;
    phi_ = enclosure.hi > den ? den : enclosure.hi;
    qlo_ = den;
    qhi_ = den;
}

bool CertifiedEngine::advance(std::vector<DigitRun> &out) {
    if (batch(out)) {
        return true;
    }
    return exact_step(out);
}

bool CertifiedEngine::exact_step(std::vector<DigitRun> &out) {
    const auto decision = decide(plo_, qlo_, phi_, qhi_);
    if (!decision) {
        return false;
    }
    apply(decision->digit, decision->count, plo_, qlo_);
    apply(decision->digit, decision->count, phi_, qhi_);
    if (decision->digit == Digit::D2) {
        std::swap(plo_, phi_);
        std::swap(qlo_, qhi_);
    }
    out.push_back(DigitRun{decision->digit, decision->count});
    return true;
}

bool CertifiedEngine::batch(std::vector<DigitRun> &out) {
    const std::size_t width = std::max(bit_length(qlo_), bit_length(qhi_));
    if (width <= 62) {
        return false; // small enough that exact steps are just as cheap
    }
    const std::size_t shift = width - 62;
    // Outward-rounded 62-bit enclosure: lower end shrinks, upper end grows.
    i128 pl = top_bits(plo_, shift);
    i128 ql = top_bits(qlo_, shift) + 1;
    i128 ph = top_bits(phi_, shift) + 1;
    i128 qh = top_bits(qhi_, shift);
    if (qh < (i128{1} << 32) || ql < (i128{1} << 32)) {
        return false;
    }

    i128 m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    bool swapped = false;
    const std::size_t first = out.size();
    for (;;) {
        const auto decision = decide(pl, ql, ph, qh);
        if (!decision) {
            break;
        }
        const i128 k = static_cast<i128>(decision->count);
        i128 a00, a01, a10, a11;
        switch (decision->digit) {
        case Digit::D1:
            a00 = 1, a01 = 0, a10 = -2 * k, a11 = 1;
            break;
        case Digit::D2:
            a00 = -2, a01 = 1, a10 = 1, a11 = 0;
            break;
        default:
            a00 = 1 + k, a01 = -k, a10 = k, a11 = 1 - k;
            break;
        }
        const i128 n00 = a00 * m00 + a01 * m10;
        const i128 n01 = a00 * m01 + a01 * m11;
        const i128 n10 = a10 * m00 + a11 * m10;
        const i128 n11 = a10 * m01 + a11 * m11;
        const auto too_big = [](i128 v) { return v >= matrix_limit || v <= -matrix_limit; };
        if (too_big(n00) || too_big(n01) || too_big(n10) || too_big(n11)) {
            break;
        }
        m00 = n00, m01 = n01, m10 = n10, m11 = n11;
        apply(decision->digit, decision->count, pl, ql);
        apply(decision->digit, decision->count, ph, qh);
        if (decision->digit == Digit::D2) {
            std::swap(pl, ph);
            std::swap(ql, qh);
            swapped = !swapped;
        }
        if (!out.empty() && out.size() > first && out.back().digit == decision->digit &&
            decision->digit != Digit::D2) {
            out.back().count += decision->count;
        } else {
            out.push_back(DigitRun{decision->digit, decision->count});
        }
    }
    if (out.size() == first) {
        return false;
    }

    const long c00 = static_cast<long>(m00), c01 = static_cast<long>(m01);
    const long c10 = static_cast<long>(m10), c11 = static_cast<long>(m11);
    const auto transform = [&](BigInt &p, BigInt &q) {
        BigInt np = p * c00 + q * c01;
        BigInt nq = p * c10 + q * c11;
        p = std::move(np);
        q = std::move(nq);
    };
    transform(plo_, qlo_);
    transform(phi_, qhi_);
    if (swapped) {
        std::swap(plo_, phi_);
        std::swap(qlo_, qhi_);
    }
    return true;
}

} // namespace barning::detail
