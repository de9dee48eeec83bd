#pragma once

#include <barning/bigint.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace barning {

// Exact rational, always stored in lowest terms with a positive denominator.
class Rat {
  public:
    Rat() = default;
    Rat(long value) : value_(value) {}
    Rat(const BigInt &value) : value_(value) {}
    Rat(const BigInt &num, const BigInt &den);
    explicit Rat(const mpq_class &value) : value_(value) { value_.canonicalize(); }

    // Accepts "p/q" or "p".
    static Rat parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class &raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }
    std::string to_string() const;

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat reciprocal() const;
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    friend Rat operator+(const Rat &a, const Rat &b) { return Rat(mpq_class(a.value_ + b.value_)); }
    friend Rat operator-(const Rat &a, const Rat &b) { return Rat(mpq_class(a.value_ - b.value_)); }
    friend Rat operator*(const Rat &a, const Rat &b) { return Rat(mpq_class(a.value_ * b.value_)); }
    friend Rat operator/(const Rat &a, const Rat &b);

    Rat &operator+=(const Rat &o) { return *this = *this + o; }
    Rat &operator-=(const Rat &o) { return *this = *this - o; }
    Rat &operator*=(const Rat &o) { return *this = *this * o; }
    Rat &operator/=(const Rat &o) { return *this = *this / o; }

    friend bool operator==(const Rat &a, const Rat &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class value_;
};

} // namespace barning
