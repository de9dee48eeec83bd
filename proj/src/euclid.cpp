#include <barning/euclid.hpp>

#include <barning/bigint.hpp>

#include <utility>

namespace barning {

std::string EuclidState::to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

EuclidState euclid_step(const EuclidState &s) {
    if (s.y > s.x) {
        throw DomainError("euclid_step expects x >= y");
    }
    if (s.is_terminal()) {
        throw DomainError("no step from terminal state " + s.to_string());
    }
    // d = x - y > 0; x - 2y = d - y, computed without leaving uint64
    const std::uint64_t d = s.x - s.y;
    if (d > s.y) {
        const std::uint64_t r = d - s.y;
        return r > s.y ? EuclidState{r, s.y} : EuclidState{s.y, r};
    }
    return EuclidState{s.y, s.y - d};
}

EuclidResult euclid_gcd(std::uint64_t x, std::uint64_t y, bool record_trace) {
    if (x == 0 && y == 0) {
        throw DomainError("gcd(0, 0) is undefined");
    }
    if (y > x) {
        std::swap(x, y);
    }
    EuclidResult out;
    EuclidState s{x, y};
    if (record_trace) {
        out.trace.push_back(s);
    }
    while (!s.is_terminal()) {
        s = euclid_step(s);
        ++out.steps;
        if (record_trace) {
            out.trace.push_back(s);
        }
    }
    out.gcd = s.x;
    return out;
}

std::string format_trace(const std::vector<EuclidState> &trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i > 0) {
            out += " -> ";
        }
        out += trace[i].to_string();
    }
    return out;
}

Rat classic_subtractive_step(const Rat &t) {
    if (t <= Rat(0) || t >= Rat(1)) {
        throw DomainError("classic_subtractive_step expects 0 < t < 1");
    }
    if (t == Rat(1, 2)) {
        throw DomainError("t = 1/2 lies on the branch boundary");
    }
    return t < Rat(1, 2) ? t / (Rat(1) - t) : (Rat(1) - t) / t;
}

} // namespace barning
