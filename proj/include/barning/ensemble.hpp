#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace barning {

struct CoprimeDensity {
    std::uint64_t radius = 0;
    std::uint64_t coprime_pairs = 0; // gcd 1, opposite parity
    std::uint64_t lattice_pairs = 0; // all m > n > 0 in the quarter disc
    double ratio = 0.0;
};

// Pairs m > n > 0 with m^2 + n^2 <= radius^2, counted by Mobius inversion.
CoprimeDensity coprime_density(std::uint64_t radius);

struct ArcPoint {
    double t;         // arc angle measured from (1, 0)
    double empirical; // fraction of PPT_N with angle below t
    double reference; // 2t/pi
};

struct ArcDistribution {
    std::uint64_t population = 0;
    std::vector<ArcPoint> points;
    double sup_deviation = 0.0;
};

// Empirical arc CDF of PPT_N (both orientations) on the given angles.
ArcDistribution arc_distribution(std::uint64_t max_c, std::span<const double> angles, unsigned threads = 1);

// `count` evenly spaced interior angles of (0, pi/2).
std::vector<double> uniform_angle_grid(std::size_t count);

struct DigitHistogram {
    std::uint64_t total = 0;
    std::array<std::uint64_t, 3> digits{}; // first digit 1, 2, 3
    std::uint64_t terminal = 0;            // the two roots

    std::array<double, 3> frequencies() const;
};

// First-digit counts over PPT_N.
DigitHistogram first_digit_histogram(std::uint64_t max_c, unsigned threads = 1);

// Arc-length fractions of the three digit arcs.
std::array<double, 3> first_digit_limit();

} // namespace barning
