#pragma once

#include <barning/bigint.hpp>
#include <barning/rat.hpp>

#include <cstddef>
#include <string>

namespace barning {

struct DyadicInterval;

// Element (p + q*sqrt(D)) / r of a real quadratic field, D >= 2 square-free.
//
// Values are kept canonical (gcd(p,q,r) = 1, r > 0) so equality of states is
// structural. Arithmetic between different D is a DomainError.
class Surd {
  public:
    Surd(BigInt p, BigInt q, BigInt r, BigInt radicand);

    // (p + q*sqrt(n)) / r for any n >= 2; square factors of n are pulled into q.
    static Surd from_quadratic(const BigInt &p, const BigInt &q, const BigInt &n, const BigInt &r);
    // Embeds a rational into Q(sqrt(D)).
    static Surd from_rat(const Rat &value, const BigInt &radicand);

    const BigInt &p() const { return p_; }
    const BigInt &q() const { return q_; }
    const BigInt &r() const { return r_; }
    const BigInt &radicand() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    Rat rational_value() const;

    int sign() const;
    int compare(const Rat &value) const;
    double to_double() const;
    // Enclosure [lo, hi] / 2^bits of the exact value.
    DyadicInterval enclose(std::size_t bits) const;

    Surd operator-() const { return Surd(-p_, -q_, r_, d_); }
    Surd reciprocal() const;
    Surd conjugate() const { return Surd(p_, -q_, r_, d_); }

    friend Surd operator+(const Surd &a, const Surd &b);
    friend Surd operator-(const Surd &a, const Surd &b) { return a + (-b); }
    friend Surd operator*(const Surd &a, const Surd &b);
    friend Surd operator/(const Surd &a, const Surd &b) { return a * b.reciprocal(); }
    friend Surd operator+(const Surd &a, const Rat &b) { return a + from_rat(b, a.d_); }
    friend Surd operator-(const Surd &a, const Rat &b) { return a + from_rat(-b, a.d_); }
    friend Surd operator-(const Rat &a, const Surd &b) { return from_rat(a, b.d_) - b; }
    friend Surd operator*(const Surd &a, const Rat &b) { return a * from_rat(b, a.d_); }

    friend bool operator==(const Surd &, const Surd &) = default;
    friend int compare(const Surd &a, const Surd &b) { return (a - b).sign(); }

    std::string to_string() const;

  private:
    void canonicalize();

    BigInt p_, q_, r_, d_;
};

struct SurdHash {
    std::size_t operator()(const Surd &s) const;
};

// Sign of a + b*sqrt(d) for d > 0, decided with integer arithmetic only.
int sign_of_quadratic(const BigInt &a, const BigInt &b, const BigInt &d);

// Largest square divisor split: n = k^2 * m with m square-free.
void split_square_factor(const BigInt &n, BigInt &k, BigInt &m);

} // namespace barning
