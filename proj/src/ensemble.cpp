#include <barning/ensemble.hpp>

#include <barning/bigint.hpp>
#include <barning/codec.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

namespace barning {

namespace {

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) {
        --r;
    }
    while ((r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

// #{ m > n > 0 : m^2 + n^2 <= bound }
std::uint64_t pairs_in_disc(std::uint64_t bound) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; 2 * n * n < bound; ++n) {
        const std::uint64_t m_max = isqrt(bound - n * n);
        if (m_max > n) {
            count += m_max - n;
        }
    }
    return count;
}

// Same count restricted to m and n both odd.
std::uint64_t odd_pairs_in_disc(std::uint64_t bound) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; 2 * n * n < bound; n += 2) {
        std::uint64_t m_max = isqrt(bound - n * n);
        if (m_max % 2 == 0) {
            --m_max;
        }
        if (m_max >= n + 2) {
            count += (m_max - n) / 2;
        }
    }
    return count;
}

std::vector<int> mobius_table(std::uint64_t limit) {
    std::vector<int> mu(limit + 1, 1);
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) {
            continue;
        }
        for (std::uint64_t k = p; k <= limit; k += p) {
            if (k > p) {
                composite[k] = true;
            }
            mu[k] = -mu[k];
        }
        for (std::uint64_t k = p * p; k <= limit; k += p * p) {
            mu[k] = 0;
        }
    }
    return mu;
}

struct SmallTriple {
    std::int64_t a, b, c;
};

// Depth-first walk over PPT_N with 64-bit entries, split over the six
// depth-one subtrees. The digit passed along is the first expansion digit of
// the node (the label of its last edge), 0 for the roots.
void walk_tree(std::uint64_t max_c, unsigned threads,
               const std::function<void(std::size_t worker, const SmallTriple &, int first_digit)> &visit) {
    const MatrixSet &ms = barning_matrices();
    const auto apply = [&ms](int d, const SmallTriple &t) {
        const auto &e = ms[static_cast<std::size_t>(d - 1)].entries;
        return SmallTriple{e[0][0] * t.a + e[0][1] * t.b + e[0][2] * t.c, e[1][0] * t.a + e[1][1] * t.b + e[1][2] * t.c,
                           e[2][0] * t.a + e[2][1] * t.b + e[2][2] * t.c};
    };
    const auto limit = static_cast<std::int64_t>(max_c);
    struct Task {
        SmallTriple start;
        int digit;
    };
    std::vector<Task> tasks;
    for (const SmallTriple root : {SmallTriple{3, 4, 5}, SmallTriple{4, 3, 5}}) {
        if (root.c > limit) {
            continue;
        }
        visit(0, root, 0);
        for (int d = 1; d <= 3; ++d) {
            const SmallTriple child = apply(d, root);
            if (child.c <= limit) {
                tasks.push_back({child, d});
            }
        }
    }
    const auto run = [&](std::size_t worker, const Task &task) {
        std::vector<Task> stack{task};
        while (!stack.empty()) {
            const Task top = stack.back();
            stack.pop_back();
            visit(worker, top.start, top.digit);
            for (int d = 3; d >= 1; --d) {
                const SmallTriple child = apply(d, top.start);
                if (child.c <= limit) {
                    stack.push_back({child, d});
                }
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(tasks.size(), 1));
    if (workers == 1) {
        for (const Task &task : tasks) {
            run(0, task);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < tasks.size(); i += workers) {
                run(w, tasks[i]);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
}

unsigned worker_count(std::uint64_t max_c, unsigned threads) {
    if (max_c > 3'000'000'000ULL) {
        throw DomainError("ensemble walks support c up to 3e9");
    }
    return std::clamp(threads, 1u, 6u);
}

} // namespace

CoprimeDensity coprime_density(std::uint64_t radius) {
    if (radius < 10 || radius > 3'000'000'000ULL) {
        throw DomainError("coprime_density expects 10 <= radius <= 3e9");
    }
    const std::uint64_t r2 = radius * radius;
    const std::vector<int> mu = mobius_table(radius);
    std::int64_t coprime = 0, coprime_odd = 0;
    for (std::uint64_t d = 1; d <= radius; ++d) {
        if (mu[d] == 0) {
            continue;
        }
        const std::uint64_t bound = r2 / (d * d);
        if (bound < 5) {
            break;
        }
        coprime += mu[d] * static_cast<std::int64_t>(pairs_in_disc(bound));
        if (d % 2 == 1) {
            coprime_odd += mu[d] * static_cast<std::int64_t>(odd_pairs_in_disc(bound));
        }
    }
    CoprimeDensity out;
    out.radius = radius;
    out.coprime_pairs = static_cast<std::uint64_t>(coprime - coprime_odd);
    out.lattice_pairs = pairs_in_disc(r2);
    out.ratio = static_cast<double>(out.coprime_pairs) / static_cast<double>(out.lattice_pairs);
    return out;
}

std::vector<double> uniform_angle_grid(std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = std::numbers::pi / 2.0 * static_cast<double>(k + 1) / static_cast<double>(count + 1);
    }
    return out;
}

ArcDistribution arc_distribution(std::uint64_t max_c, std::span<const double> angles, unsigned threads) {
    const unsigned workers = worker_count(max_c, threads);
    std::vector<std::vector<double>> buckets(workers);
    walk_tree(max_c, workers, [&buckets](std::size_t w, const SmallTriple &t, int) {
        buckets[w].push_back(std::atan2(static_cast<double>(t.b), static_cast<double>(t.a)));
    });
    std::vector<double> all;
    for (auto &b : buckets) {
        all.insert(all.end(), b.begin(), b.end());
    }
    if (all.empty()) {
        throw DomainError("PPT_N is empty for N < 5");
    }
    std::sort(all.begin(), all.end());
    ArcDistribution out;
    out.population = all.size();
    for (double t : angles) {
        const auto below = std::lower_bound(all.begin(), all.end(), t) - all.begin();
        const double empirical = static_cast<double>(below) / static_cast<double>(all.size());
        const double reference = 2.0 * t / std::numbers::pi;
        out.points.push_back({t, empirical, reference});
        out.sup_deviation = std::max(out.sup_deviation, std::abs(empirical - reference));
    }
    return out;
}

std::array<double, 3> DigitHistogram::frequencies() const {
    std::array<double, 3> out{};
    if (total == 0) {
        return out;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = static_cast<double>(digits[i]) / static_cast<double>(total);
    }
    return out;
}

DigitHistogram first_digit_histogram(std::uint64_t max_c, unsigned threads) {
    const unsigned workers = worker_count(max_c, threads);
    std::vector<DigitHistogram> partial(workers);
    walk_tree(max_c, workers, [&partial](std::size_t w, const SmallTriple &, int first) {
        DigitHistogram &h = partial[w];
        ++h.total;
        if (first == 0) {
            ++h.terminal;
        } else {
            ++h.digits[static_cast<std::size_t>(first - 1)];
        }
    });
    DigitHistogram out;
    for (const auto &h : partial) {
        out.total += h.total;
        out.terminal += h.terminal;
        for (std::size_t i = 0; i < 3; ++i) {
            out.digits[i] += h.digits[i];
        }
    }
    return out;
}

std::array<double, 3> first_digit_limit() {
    const double outer = 1.0 - 2.0 / std::numbers::pi * std::atan(4.0 / 3.0);
    const double middle = 2.0 / std::numbers::pi * (std::atan(4.0 / 3.0) - std::atan(3.0 / 4.0));
    return {outer, middle, outer};
}

} // namespace barning
