#include <barning/types.hpp>

#include <stdexcept>

namespace barning {

Digit digit_from_int(int value) {
    if (value < 1 || value > 3) {
        throw DomainError("digit must be 1, 2 or 3, got " + std::to_string(value));
    }
    return static_cast<Digit>(value);
}

std::string_view digit_name(Digit d) {
    switch (d) {
    case Digit::D1:
        return "1";
    case Digit::D2:
        return "2";
    case Digit::D3:
        return "3";
    case Digit::OE:
        return "oe";
    case Digit::EO:
        return "eo";
    }
    return "?";
}

DigitWord parse_word(std::string_view text) {
    DigitWord word;
    word.reserve(text.size());
    for (char ch : text) {
        if (ch == ',' || ch == ' ') {
            continue;
        }
        if (ch < '1' || ch > '3') {
            throw DomainError("invalid digit '" + std::string(1, ch) + "' in word");
        }
        word.push_back(static_cast<Digit>(ch - '0'));
    }
    return word;
}

std::string word_to_string(const DigitWord &word) {
    std::string out;
    out.reserve(word.size());
    for (Digit d : word) {
        out += static_cast<char>('0' + digit_value(d));
    }
    return out;
}

Expansion::Expansion(DigitWord digits, std::optional<Digit> terminal)
    : digits_(std::move(digits)), terminal_(terminal) {
    for (Digit d : digits_) {
        if (is_terminal(d)) {
            throw DomainError("terminal symbol inside the digit part of an expansion");
        }
    }
    if (terminal_ && !is_terminal(*terminal_)) {
        throw DomainError("expansion terminal must be oe or eo");
    }
}

Expansion Expansion::parse(std::string_view text) {
    constexpr std::string_view ellipsis = "\xE2\x80\xA6";
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const auto tail = text.substr(colon + 1);
        Digit terminal;
        if (tail == "oe") {
            terminal = Digit::OE;
        } else if (tail == "eo") {
            terminal = Digit::EO;
        } else {
            throw DomainError("expansion terminal must be 'oe' or 'eo', got '" + std::string(tail) + "'");
        }
        return finite(parse_word(text.substr(0, colon)), terminal);
    }
    if (text.ends_with(ellipsis)) {
        text.remove_suffix(ellipsis.size());
    } else if (text.ends_with("...")) {
        text.remove_suffix(3);
    }
    if (text.empty()) {
        throw DomainError("empty expansion prefix");
    }
    return prefix(parse_word(text));
}

std::string Expansion::to_string() const {
    std::string out = word_to_string(digits_);
    if (terminal_) {
        out += ':';
        out += digit_name(*terminal_);
    } else {
        out += "\xE2\x80\xA6";
    }
    return out;
}

Triple::Triple(BigInt a, BigInt b, BigInt c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (c_ <= 0) {
        throw DomainError("triple needs c > 0: " + to_string());
    }
    if (a_ * a_ + b_ * b_ != c_ * c_) {
        throw DomainError("not a Pythagorean triple: " + to_string());
    }
    if (big_gcd(a_, b_) != 1) {
        throw DomainError("triple is not primitive: " + to_string());
    }
}

bool Triple::is_closure() const {
    return c_ == 1 && ((a_ == 1 && b_ == 0) || (a_ == 0 && b_ == 1));
}

std::string Triple::to_string() const {
    return a_.get_str() + " " + b_.get_str() + " " + c_.get_str();
}

QPoint::QPoint(Rat x, Rat y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.sign() < 0 || y_.sign() < 0) {
        throw DomainError("point outside the positive quadrant");
    }
    if (x_ * x_ + y_ * y_ != Rat(1)) {
        throw DomainError("point not on the unit circle");
    }
}

std::string QPoint::to_string() const {
    return "(" + x_.to_string() + "," + y_.to_string() + ")";
}

Triple triple_from_point(const QPoint &p) {
    if (p.is_closure()) {
        throw DomainError("closure point " + p.to_string() + " has no PPT");
    }
    // On the circle both coordinates share the reduced denominator c.
    return Triple(p.x().num(), p.y().num(), p.x().den());
}

QPoint point_from_triple(const Triple &t) {
    return QPoint(Rat(t.a(), t.c()), Rat(t.b(), t.c()));
}

} // namespace barning
