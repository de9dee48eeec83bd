#include <barning/rat.hpp>

#include <stdexcept>

namespace barning {

Rat::Rat(const BigInt &num, const BigInt &den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_bigint(text));
    }
    return Rat(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::string Rat::to_string() const {
    if (is_integer()) {
        return num().get_str();
    }
    return num().get_str() + "/" + den().get_str();
}

Rat Rat::reciprocal() const {
    if (sign() == 0) {
        throw DomainError("reciprocal of zero");
    }
    return Rat(den(), num());
}

Rat operator/(const Rat &a, const Rat &b) {
    if (b.sign() == 0) {
        throw DomainError("division by zero");
    }
    return Rat(mpq_class(a.value_ / b.value_));
}

} // namespace barning
