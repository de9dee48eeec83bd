#include <barning/codec.hpp>

#include <stdexcept>

namespace barning {

namespace {

const Triple &root_oe() {
    static const Triple t(3, 4, 5);
    return t;
}

const Triple &root_eo() {
    static const Triple t(4, 3, 5);
    return t;
}

void require_ppt(const Triple &t, const char *op) {
    if (!t.is_ppt()) {
        throw DomainError(std::string(op) + ": " + t.to_string() + " is not a PPT");
    }
}

} // namespace

long BarningMatrix::determinant() const {
    const auto &m = entries;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Triple BarningMatrix::apply(const Triple &t) const {
    const auto &m = entries;
    return Triple(m[0][0] * t.a() + m[0][1] * t.b() + m[0][2] * t.c(),
                  m[1][0] * t.a() + m[1][1] * t.b() + m[1][2] * t.c(),
                  m[2][0] * t.a() + m[2][1] * t.b() + m[2][2] * t.c());
}

const MatrixSet &barning_matrices() {
    static const MatrixSet set{{
        {1, {{{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}}}},
        {2, {{{1, 2, 2}, {2, 1, 2}, {2, 2, 3}}}},
        {3, {{{1, -2, 2}, {2, -1, 2}, {2, -2, 3}}}},
    }};
    return set;
}

Digit digit_of(const Triple &t) {
    require_ppt(t, "digit_of");
    if (t == root_oe()) {
        return Digit::OE;
    }
    if (t == root_eo()) {
        return Digit::EO;
    }
    const BigInt lhs3 = 3 * t.a();
    const BigInt rhs4 = 4 * t.b();
    if (lhs3 > rhs4) {
        return Digit::D1;
    }
    const BigInt lhs4 = 4 * t.a();
    const BigInt rhs3 = 3 * t.b();
    if (lhs4 < rhs3) {
        return Digit::D3;
    }
    if (lhs3 == rhs4 || lhs4 == rhs3) {
        // a/b = 4/3 or 3/4 forces a multiple of (4,3,5) or (3,4,5).
        throw std::logic_error("digit_of: boundary ratio on a non-root PPT " + t.to_string());
    }
    return Digit::D2;
}

Triple parent(const Triple &t) {
    require_ppt(t, "parent");
    const BigInt &a = t.a();
    const BigInt &b = t.b();
    const BigInt &c = t.c();
    return Triple(big_abs(BigInt(2 * c - a - 2 * b)), big_abs(BigInt(2 * c - 2 * a - b)), 3 * c - 2 * a - 2 * b);
}

Triple child(const Triple &t, Digit d, const MatrixSet &matrices) {
    require_ppt(t, "child");
    if (is_terminal(d)) {
        throw DomainError("child: digit must be 1, 2 or 3");
    }
    return matrices[static_cast<std::size_t>(digit_value(d) - 1)].apply(t);
}

Expansion encode(const Triple &t) {
    require_ppt(t, "encode");
    DigitWord digits;
    Triple current = t;
    // c strictly decreases, so this runs at most c times.
    for (;;) {
        const Digit d = digit_of(current);
        if (is_terminal(d)) {
            return Expansion::finite(std::move(digits), d);
        }
        digits.push_back(d);
        current = parent(current);
    }
}

Triple decode(const Expansion &e, const MatrixSet &matrices) {
    if (!e.is_finite()) {
        throw DomainError("decode: expansion has no terminal digit");
    }
    Triple current = (*e.terminal() == Digit::OE) ? root_oe() : root_eo();
    const auto &digits = e.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        current = matrices[static_cast<std::size_t>(digit_value(*it) - 1)].apply(current);
    }
    return current;
}

QPoint circle_map(const QPoint &p) {
    if (p.is_closure()) {
        throw DomainError("circle_map: closure point " + p.to_string());
    }
    const Rat &x = p.x();
    const Rat &y = p.y();
    const Rat den = Rat(3) - 2 * x - 2 * y;
    return QPoint((Rat(2) - x - 2 * y).abs() / den, (Rat(2) - 2 * x - y).abs() / den);
}

} // namespace barning
