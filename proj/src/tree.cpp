#include <barning/tree.hpp>

#include <cmath>
#include <numeric>
#include <random>

namespace barning {

TreeEnumerator::TreeEnumerator(BigInt max_c, RootSelection roots) : max_c_(std::move(max_c)) {
    if (max_c_ < 5) {
        return;
    }
    // Stack is LIFO: push EO first so OE is visited first.
    if (roots != RootSelection::OE) {
        stack_.push_back(Frame{Triple(4, 3, 5), {}, Digit::EO});
    }
    if (roots != RootSelection::EO) {
        stack_.push_back(Frame{Triple(3, 4, 5), {}, Digit::OE});
    }
}

std::optional<TreeCursor> TreeEnumerator::next() {
    if (stack_.empty()) {
        return std::nullopt;
    }
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    const auto &matrices = barning_matrices();
    for (int d = 3; d >= 1; --d) {
        Triple kid = matrices[static_cast<std::size_t>(d - 1)].apply(frame.triple);
        if (kid.c() <= max_c_) {
            // the newest edge is the leading digit
            DigitWord path;
            path.reserve(frame.path.size() + 1);
            path.push_back(static_cast<Digit>(d));
            path.insert(path.end(), frame.path.begin(), frame.path.end());
            stack_.push_back(Frame{std::move(kid), std::move(path), frame.root});
        }
    }
    return TreeCursor{std::move(frame.triple), Expansion::finite(std::move(frame.path), frame.root)};
}

void enumerate_by_c(const BigInt &max_c, RootSelection roots, const std::function<void(const TreeCursor &)> &visit) {
    TreeEnumerator it(max_c, roots);
    while (auto cursor = it.next()) {
        visit(*cursor);
    }
}

std::uint64_t count_by_c(const BigInt &max_c, RootSelection roots) {
    std::uint64_t n = 0;
    TreeEnumerator it(max_c, roots);
    while (it.next()) {
        ++n;
    }
    return n;
}

std::vector<Triple> uniform_sample(std::uint64_t max_c, std::size_t count, std::uint64_t seed) {
    if (max_c < 5) {
        throw DomainError("uniform_sample needs N >= 5");
    }
    std::vector<Triple> out;
    out.reserve(count);
    std::mt19937_64 rng(seed);
    const auto limit = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(max_c))) + 1;
    std::uniform_int_distribution<std::uint64_t> coord(1, limit);
    std::bernoulli_distribution flip(0.5);
    while (out.size() < count) {
        const std::uint64_t m = coord(rng);
        const std::uint64_t n = coord(rng);
        if (m <= n || ((m + n) & 1U) == 0 || std::gcd(m, n) != 1) {
            continue;
        }
        const BigInt bm(static_cast<unsigned long>(m));
        const BigInt bn(static_cast<unsigned long>(n));
        const BigInt c = bm * bm + bn * bn;
        if (c > static_cast<unsigned long>(max_c)) {
            continue;
        }
        const BigInt a = bm * bm - bn * bn;
        const BigInt b = 2 * bm * bn;
        if (flip(rng)) {
            out.emplace_back(b, a, c);
        } else {
            out.emplace_back(a, b, c);
        }
    }
    return out;
}

} // namespace barning
