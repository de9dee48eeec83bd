#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace barning {

// Arbitrary-precision integer. Third coordinates along a tree branch grow
// geometrically, so nothing in the library uses fixed-width triples.
using BigInt = mpz_class;

// Thrown when an input lies outside the domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

inline BigInt big_gcd(const BigInt &a, const BigInt &b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt big_abs(const BigInt &a) {
    return a < 0 ? BigInt(-a) : a;
}

inline std::size_t bit_length(const BigInt &a) {
    return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

// Floor division; GMP's operator/ truncates toward zero.
inline BigInt floor_div(const BigInt &a, const BigInt &b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt ceil_div(const BigInt &a, const BigInt &b) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw DomainError("empty integer literal");
    }
    BigInt v;
    if (v.set_str(s, 10) != 0) {
        throw DomainError("not an integer: " + s);
    }
    return v;
}

} // namespace barning
