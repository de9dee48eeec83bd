#pragma once

#include <barning/bigint.hpp>
#include <barning/rat.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace barning {

// A ternary digit, or one of the two terminal symbols that close a finite
// expansion: OE for the (3,4,5) root (a odd, b even), EO for (4,3,5).
enum class Digit : std::uint8_t { D1 = 1, D2 = 2, D3 = 3, OE = 4, EO = 5 };

constexpr bool is_terminal(Digit d) { return d == Digit::OE || d == Digit::EO; }
constexpr int digit_value(Digit d) { return static_cast<int>(d); }
Digit digit_from_int(int value);
std::string_view digit_name(Digit d);

using DigitWord = std::vector<Digit>;

// Parses a word over {1,2,3} such as "1213".
DigitWord parse_word(std::string_view text);
std::string word_to_string(const DigitWord &word);

// Finite expansion (digits plus terminal) or a finite prefix of an infinite one.
//
// Text grammar: finite expansions are `([123]*):(oe|eo)`, prefixes are
// `[123]+…`. An empty digit part is legal for finite expansions (":oe").
class Expansion {
  public:
    Expansion() = default;
    Expansion(DigitWord digits, std::optional<Digit> terminal);

    static Expansion finite(DigitWord digits, Digit terminal) { return {std::move(digits), terminal}; }
    static Expansion prefix(DigitWord digits) { return {std::move(digits), std::nullopt}; }
    static Expansion parse(std::string_view text);

    const DigitWord &digits() const { return digits_; }
    const std::optional<Digit> &terminal() const { return terminal_; }
    bool is_finite() const { return terminal_.has_value(); }
    // n(a,b,c): the number of non-terminal digits.
    std::size_t length() const { return digits_.size(); }

    std::string to_string() const;

    friend bool operator==(const Expansion &, const Expansion &) = default;

  private:
    DigitWord digits_;
    std::optional<Digit> terminal_;
};

// Solution of a^2 + b^2 = c^2 with gcd(a,b) = 1 and c > 0 (a signed PPT).
// Construction asserts the invariants and throws DomainError otherwise.
class Triple {
  public:
    Triple(BigInt a, BigInt b, BigInt c);
    Triple(long a, long b, long c) : Triple(BigInt(a), BigInt(b), BigInt(c)) {}

    const BigInt &a() const { return a_; }
    const BigInt &b() const { return b_; }
    const BigInt &c() const { return c_; }

    // Auxiliary coordinates in which the equation reads q^2 = 2mn.
    BigInt m() const { return c_ - a_; }
    BigInt n() const { return c_ - b_; }
    BigInt q() const { return a_ + b_ - c_; }

    bool is_ppt() const { return a_ > 0 && b_ > 0; }
    // (1,0,1) and (0,1,1): images of the two roots under the parent map.
    bool is_closure() const;
    bool a_is_odd() const { return mpz_odd_p(a_.get_mpz_t()) != 0; }

    std::string to_string() const;

    friend bool operator==(const Triple &, const Triple &) = default;

  private:
    BigInt a_, b_, c_;
};

// Rational point of the closed positive quadrant of the unit circle.
class QPoint {
  public:
    QPoint(Rat x, Rat y);

    const Rat &x() const { return x_; }
    const Rat &y() const { return y_; }
    // (1,0) or (0,1).
    bool is_closure() const { return x_.sign() == 0 || y_.sign() == 0; }
    std::string to_string() const;

    friend bool operator==(const QPoint &, const QPoint &) = default;

  private:
    Rat x_, y_;
};

// (x,y) = (a/c, b/c) in lowest terms -> (a,b,c). Rejects closure points.
Triple triple_from_point(const QPoint &p);

// (a,b,c) -> (a/c, b/c). Closure triples map to the closure points.
QPoint point_from_triple(const Triple &t);

} // namespace barning
