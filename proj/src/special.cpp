#include <barning/special.hpp>

#include <barning/codec.hpp>

#include <unordered_map>

namespace barning {

std::optional<PeriodicityReport> detect_period(const Surd &start, std::size_t horizon) {
    if (start.is_rational()) {
        throw DomainError("rational points have finite expansions; use encode");
    }
    std::unordered_map<Surd, std::size_t, SurdHash> seen;
    PeriodicityReport report;
    DigitWord digits;
    Surd state = start;
    for (std::size_t i = 0; i <= horizon; ++i) {
        const auto [it, inserted] = seen.emplace(state, i);
        if (!inserted) {
            report.preperiod = it->second;
            report.period = i - it->second;
            report.word.assign(digits.begin() + static_cast<std::ptrdiff_t>(report.preperiod), digits.end());
            return report;
        }
        report.states.push_back(state);
        auto next = step(state);
        digits.push_back(next.digit);
        state = std::move(next.image);
    }
    return std::nullopt;
}

Surd periodic_point(const DigitWord &word) {
    if (word.empty()) {
        throw DomainError("periodic_point expects a non-empty word");
    }
    bool all_ones = true, all_threes = true;
    Mobius m;
    for (Digit d : word) {
        all_ones = all_ones && d == Digit::D1;
        all_threes = all_threes && d == Digit::D3;
        m = m.compose(branch(d).inverse);
    }
    if (all_ones || all_threes) {
        throw DomainError("all-1 and all-3 words have no fixed point in (0,1)");
    }
    // c t^2 + (d - a) t - b = 0
    const BigInt disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
    for (int sign : {1, -1}) {
        const Surd root = Surd::from_quadratic(m.a - m.d, BigInt(sign), disc, 2 * m.c);
        if (root.is_rational()) {
            throw DomainError("fixed point of " + word_to_string(word) + " is rational");
        }
        if (root.compare(Rat(0)) > 0 && root.compare(Rat(1)) < 0) {
            return root;
        }
    }
    throw DomainError("no fixed point of " + word_to_string(word) + " in (0,1)");
}

Triple family_ones(unsigned n) {
    const BigInt k = 4 * BigInt(n + 1);
    const BigInt sq = BigInt(k * (n + 1));
    return Triple(sq - 1, k, sq + 1);
}

Triple family_twos(unsigned n) {
    BigInt c_prev = 5, c = 29, s_prev = 7, s = 41;
    if (n == 0) {
        c = c_prev;
        s = s_prev;
    }
    for (unsigned k = 1; k < n; ++k) {
        BigInt c_next = 6 * c - c_prev;
        BigInt s_next = 6 * s - s_prev;
        c_prev = std::move(c);
        c = std::move(c_next);
        s_prev = std::move(s);
        s = std::move(s_next);
    }
    const int sign = n % 2 == 0 ? 1 : -1;
    const BigInt a = (s - sign) / 2;
    return Triple(a, a + sign, c);
}

DigitWord cos_pattern_prefix(CosPattern which, std::size_t k_blocks) {
    if (k_blocks == 0) {
        throw DomainError("k_blocks must be at least 1");
    }
    DigitWord out;
    if (which == CosPattern::Cos1) {
        out.push_back(Digit::D3);
        for (std::size_t j = 1; j <= k_blocks; ++j) {
            out.insert(out.end(), 2 * j, Digit::D1);
            out.push_back(Digit::D3);
        }
    } else {
        for (std::size_t j = 0; j < k_blocks; ++j) {
            out.insert(out.end(), 4 * j + 1, Digit::D1);
            out.push_back(Digit::D3);
        }
    }
    return out;
}

Point cos_pattern_point(CosPattern which) {
    return which == CosPattern::Cos1 ? enclose_tan(Rat(1, 2)) : enclose_tan(Rat(1, 4));
}

PatternCheck verify_cos_patterns(CosPattern which, std::size_t k_blocks, std::size_t precision_budget) {
    PatternCheck out;
    out.expected = cos_pattern_prefix(which, k_blocks);
    ExpandOptions options;
    options.max_digits = out.expected.size();
    options.precision_budget = precision_budget;
    out.observed = expand(cos_pattern_point(which), options).digits();
    out.pass = out.observed == out.expected;
    return out;
}

std::vector<BigInt> continued_fraction(const Rat &value) {
    if (value.sign() < 0) {
        throw DomainError("continued_fraction expects a non-negative value");
    }
    std::vector<BigInt> terms;
    BigInt p = value.num(), q = value.den();
    while (q != 0) {
        BigInt a = floor_div(p, q);
        BigInt r = p - a * q;
        terms.push_back(std::move(a));
        p = std::move(q);
        q = std::move(r);
    }
    return terms;
}

ContinuedFractionCheck tan_half_cf_crosscheck(std::size_t k) {
    if (k == 0) {
        throw DomainError("k must be at least 1");
    }
    ContinuedFractionCheck out;
    out.k = k;
    DigitWord word;
    for (std::size_t j = 1; j <= k; ++j) {
        word.push_back(Digit::D3);
        word.insert(word.end(), 2 * j, Digit::D1);
    }
    Rat value(1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        value = inverse_branch(*it, value);
    }
    out.approximant = value;
    out.expected_terms = {BigInt(0), BigInt(1)};
    for (std::size_t j = 1; j <= k; ++j) {
        out.expected_terms.emplace_back(1);
        out.expected_terms.emplace_back(static_cast<unsigned long>(4 * j));
    }
    out.observed_terms = continued_fraction(value);

    const CylinderInterval cyl = cylinder(word);
    const PrecisionInterval tan_half = enclose_tan(Rat(1, 2), 64 + 16 * k * k);
    out.tan_half_in_cylinder = cyl.lo < tan_half.lo() && tan_half.hi() < cyl.hi;
    out.pass = out.observed_terms == out.expected_terms && out.tan_half_in_cylinder;
    return out;
}

} // namespace barning
