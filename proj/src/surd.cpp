#include <barning/surd.hpp>

#include <barning/precision.hpp>

#include <functional>

namespace barning {

namespace {

BigInt isqrt(const BigInt &n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

void require_same_field(const Surd &a, const Surd &b) {
    if (a.radicand() != b.radicand()) {
        throw DomainError("surd arithmetic across different radicands");
    }
}

} // namespace

int sign_of_quadratic(const BigInt &a, const BigInt &b, const BigInt &d) {
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sa >= 0 && sb >= 0) {
        return (sa > 0 || sb > 0) ? 1 : 0;
    }
    if (sa <= 0 && sb <= 0) {
        return -1;
    }
    // Opposite signs: compare a^2 with b^2 d.
    const int c = cmp(BigInt(a * a), BigInt(b * b * d));
    if (c == 0) {
        return 0;
    }
    return (c > 0) ? sa : sb;
}

void split_square_factor(const BigInt &n, BigInt &k, BigInt &m) {
    if (n <= 0) {
        throw DomainError("radicand must be positive");
    }
    k = 1;
    m = 1;
    BigInt rest = n;
    // Once every prime p with p^3 <= rest is removed, the cofactor has at most
    // two prime factors: it is 1, a prime, a product of two primes, or a square.
    for (BigInt p = 2; p * p * p <= rest; p = (p == 2) ? BigInt(3) : BigInt(p + 2)) {
        unsigned exponent = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++exponent;
        }
        for (unsigned i = 0; i < exponent / 2; ++i) {
            k *= p;
        }
        if (exponent % 2 == 1) {
            m *= p;
        }
    }
    if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
        k *= isqrt(rest);
    } else {
        m *= rest;
    }
}

Surd::Surd(BigInt p, BigInt q, BigInt r, BigInt radicand)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(radicand)) {
    if (r_ == 0) {
        throw DomainError("surd with zero denominator");
    }
    if (d_ < 2) {
        throw DomainError("surd radicand must be >= 2");
    }
    canonicalize();
}

Surd Surd::from_quadratic(const BigInt &p, const BigInt &q, const BigInt &n, const BigInt &r) {
    BigInt k, m;
    split_square_factor(n, k, m);
    if (m == 1) {
        throw DomainError("sqrt(" + n.get_str() + ") is rational");
    }
    return Surd(p, q * k, r, m);
}

Surd Surd::from_rat(const Rat &value, const BigInt &radicand) {
    return Surd(value.num(), 0, value.den(), radicand);
}

void Surd::canonicalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    BigInt g = big_gcd(big_gcd(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

Rat Surd::rational_value() const {
    if (!is_rational()) {
        throw DomainError("surd " + to_string() + " is irrational");
    }
    return Rat(p_, r_);
}

int Surd::sign() const {
    return sign_of_quadratic(p_, q_, d_);
}

int Surd::compare(const Rat &value) const {
    // (p + q sqrt D)/r - n/m, r,m > 0  ~  (p m - n r) + q m sqrt D
    const BigInt n = value.num();
    const BigInt m = value.den();
    return sign_of_quadratic(BigInt(p_ * m - n * r_), BigInt(q_ * m), d_);
}

double Surd::to_double() const {
    const DyadicInterval e = enclose(80);
    return e.midpoint_double();
}

DyadicInterval Surd::enclose(std::size_t bits) const {
    BigInt scale = 1;
    scale <<= bits;
    const BigInt s = isqrt(BigInt(q_ * q_ * d_ * scale * scale));
    const BigInt base = p_ * scale;
    BigInt lo, hi;
    if (q_ >= 0) {
        lo = base + s;
        hi = base + s + 1;
    } else {
        lo = base - s - 1;
        hi = base - s;
    }
    return DyadicInterval{floor_div(lo, r_), ceil_div(hi, r_), bits};
}

Surd Surd::reciprocal() const {
    const BigInt norm = p_ * p_ - q_ * q_ * d_;
    if (norm == 0) {
        throw DomainError("reciprocal of zero surd");
    }
    return Surd(r_ * p_, -r_ * q_, norm, d_);
}

Surd operator+(const Surd &a, const Surd &b) {
    require_same_field(a, b);
    return Surd(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, a.r_ * b.r_, a.d_);
}

Surd operator*(const Surd &a, const Surd &b) {
    require_same_field(a, b);
    return Surd(a.p_ * b.p_ + a.q_ * b.q_ * a.d_, a.p_ * b.q_ + b.p_ * a.q_, a.r_ * b.r_, a.d_);
}

std::string Surd::to_string() const {
    return "(" + p_.get_str() + (q_ < 0 ? "-" : "+") + big_abs(q_).get_str() + "*sqrt(" + d_.get_str() +
           "))/" + r_.get_str();
}

std::size_t SurdHash::operator()(const Surd &s) const {
    std::hash<std::string> h;
    return h(s.p().get_str(16)) ^ (h(s.q().get_str(16)) * 31) ^ (h(s.r().get_str(16)) * 1009) ^
           (h(s.radicand().get_str(16)) * 7919);
}

} // namespace barning
