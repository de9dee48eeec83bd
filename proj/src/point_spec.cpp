#include <barning/point_spec.hpp>

#include <vector>

namespace barning {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

} // namespace

Point parse_point(std::string_view text) {
    if (text == "tanhalf") {
        return enclose_tan(Rat(1, 2));
    }
    if (text == "tanquarter") {
        return enclose_tan(Rat(1, 4));
    }
    if (text == "recip-pi") {
        return enclose_tan_half_recip_pi();
    }
    const auto parts = split(text, ':');
    if (parts.size() == 2 && parts[0] == "rat") {
        return Rat::parse(parts[1]);
    }
    if (parts.size() == 5 && parts[0] == "sqrt") {
        const BigInt n = parse_bigint(parts[1]);
        if (n < 2) {
            throw DomainError("sqrt: radicand must be at least 2");
        }
        Surd s = Surd::from_quadratic(parse_bigint(parts[2]), parse_bigint(parts[3]), n, parse_bigint(parts[4]));
        if (s.is_rational()) {
            return s.rational_value();
        }
        return s;
    }
    throw DomainError("unknown point '" + std::string(text) + "'\n" + point_spec_help());
}

std::string point_spec_help() {
    return "points: rat:P/Q | sqrt:D:P:Q:R for (P+Q*sqrt(D))/R | tanhalf | tanquarter | recip-pi";
}

} // namespace barning
