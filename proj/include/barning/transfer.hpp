#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace barning {

enum class QuadratureRule {
    // Gauss-Legendre on every piece between interpolation breakpoints, over all of (0,1).
    GaussBreakpoints,
    // Composite trapezoid on the grid nodes only (mass below delta and above 1-delta is dropped).
    Trapezoid,
};

// Function on (0,1) in the t-coordinate, known at the nodes of a uniform grid
// on [delta, 1-delta]. Between nodes f(t) t(1-t) is a local cubic; outside the grid f
// is extended linearly from the two edge nodes and clamped at zero.
class GridFunction {
  public:
    GridFunction(double delta, std::vector<double> values, QuadratureRule rule = QuadratureRule::GaussBreakpoints);

    static GridFunction sample(const std::function<double(double)> &f, std::size_t nodes = 10000,
                               double delta = 1e-4, QuadratureRule rule = QuadratureRule::GaussBreakpoints);

    std::size_t size() const { return values_.size(); }
    double delta() const { return delta_; }
    double spacing() const { return spacing_; }
    double node(std::size_t i) const;
    std::span<const double> values() const { return values_; }
    QuadratureRule rule() const { return rule_; }

    double operator()(double t) const;

    GridFunction with_values(std::vector<double> values) const;

  private:
    double delta_;
    double spacing_;
    std::vector<double> values_;
    std::vector<double> regularized_;
    QuadratureRule rule_;
};

// Density of the normalized arc-length measure in the t-coordinate, 4/(pi (1+t^2)).
double lambda_density(double t);

// (Hf)(t): the transfer operator of the circle map with respect to arc length,
// evaluated at D(t) with the interpolated f.
double transfer_eval(const GridFunction &f, double t);

// Hf sampled on the same grid.
GridFunction transfer_apply(const GridFunction &f);

// Integral of f against lambda over (a, b), using the function's quadrature rule.
double lambda_mass(const GridFunction &f, double a = 0.0, double b = 1.0);

// Integral of Hf against lambda over (0,1), integrating transfer_eval directly.
double lambda_mass_of_transfer(const GridFunction &f);

// lambda-mass of f on the digit intervals (0,1/3), (1/3,1/2), (1/2,1).
std::array<double, 3> partition_masses(const GridFunction &f);

// Distribution of the n-th digit under H^{n-1}(1) dlambda, for n = 1..max_n.
std::vector<std::array<double, 3>> digit_distributions(std::size_t max_n, std::size_t nodes = 10000,
                                                       double delta = 1e-4);

std::array<double, 3> digit_distribution(std::size_t n, std::size_t nodes = 10000, double delta = 1e-4);

} // namespace barning
