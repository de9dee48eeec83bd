#include <barning/transfer.hpp>

#include <barning/bigint.hpp>

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace barning {

namespace {

using Gauss = boost::math::quadrature::gauss<double, 10>;

// Sum of integrals of g over consecutive pieces of sorted breakpoints.
template <typename F> double integrate_pieces(const F &g, const std::vector<double> &cuts) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i]) {
            total += Gauss::integrate(g, cuts[i], cuts[i + 1]);
        }
    }
    return total;
}

void sort_unique(std::vector<double> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

GridFunction::GridFunction(double delta, std::vector<double> values, QuadratureRule rule)
    : delta_(delta), spacing_(0.0), values_(std::move(values)), rule_(rule) {
    if (!(delta > 0.0 && delta < 0.5)) {
        throw DomainError("grid cutoff must lie in (0, 1/2)");
    }
    if (values_.size() < 2) {
        throw DomainError("grid needs at least two nodes");
    }
    spacing_ = (1.0 - 2.0 * delta_) / static_cast<double>(values_.size() - 1);
    regularized_.resize(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double t = node(i);
        regularized_[i] = values_[i] * t * (1.0 - t);
    }
}

GridFunction GridFunction::sample(const std::function<double(double)> &f, std::size_t nodes, double delta,
                                  QuadratureRule rule) {
    if (nodes < 2) {
        throw DomainError("grid needs at least two nodes");
    }
    std::vector<double> values(nodes);
    const double h = (1.0 - 2.0 * delta) / static_cast<double>(nodes - 1);
    for (std::size_t i = 0; i < nodes; ++i) {
        values[i] = f(delta + static_cast<double>(i) * h);
    }
    return GridFunction(delta, std::move(values), rule);
}

double GridFunction::node(std::size_t i) const {
    return i + 1 == values_.size() ? 1.0 - delta_ : delta_ + static_cast<double>(i) * spacing_;
}

double GridFunction::operator()(double t) const {
    const std::size_t n = values_.size();
    if (t <= delta_) {
        const double slope = (values_[1] - values_[0]) / spacing_;
        return std::max(0.0, values_[0] + slope * (t - delta_));
    }
    if (t >= 1.0 - delta_) {
        const double slope = (values_[n - 1] - values_[n - 2]) / spacing_;
        return std::max(0.0, values_[n - 1] + slope * (t - (1.0 - delta_)));
    }
    std::size_t i = static_cast<std::size_t>((t - delta_) / spacing_);
    i = std::min(i, n - 2);
    if (n < 4) {
        const double w = (t - node(i)) / (node(i + 1) - node(i));
        return (regularized_[i] + w * (regularized_[i + 1] - regularized_[i])) / (t * (1.0 - t));
    }
    // cubic through the four nodes around t, shifted inward at the grid edges
    const std::size_t first = std::min(i == 0 ? 0 : i - 1, n - 4);
    const double s = (t - node(first)) / spacing_;
    const double *g = &regularized_[first];
    const double l0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    const double l1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    const double l2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    const double l3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    return (l0 * g[0] + l1 * g[1] + l2 * g[2] + l3 * g[3]) / (t * (1.0 - t));
}

GridFunction GridFunction::with_values(std::vector<double> values) const {
    if (values.size() != values_.size()) {
        throw DomainError("grid size mismatch");
    }
    return GridFunction(delta_, std::move(values), rule_);
}

double lambda_density(double t) {
    return 4.0 / (std::numbers::pi * (1.0 + t * t));
}

double transfer_eval(const GridFunction &f, double t) {
    const double s = 1.0 + t * t;
    const double x = (1.0 - t * t) / s;
    const double y = 2.0 * t / s;
    const double one_minus_x = 2.0 * t * t / s;
    const double one_minus_y = (1.0 - t) * (1.0 - t) / s;

    const double den1 = 1.0 + 2.0 * x + 2.0 * one_minus_y;
    const double den2 = 3.0 + 2.0 * x + 2.0 * y;
    const double den3 = 1.0 + 2.0 * one_minus_x + 2.0 * y;
    // preimages mapped back through D^{-1}(X, Y) = (1 - X)/Y
    const double t1 = (1.0 + x) / (1.0 + 2.0 * x + one_minus_y);
    const double t2 = (1.0 + x) / (2.0 + 2.0 * x + y);
    const double t3 = one_minus_x / (2.0 * one_minus_x + y);
    return f(t1) / den1 + f(t2) / den2 + f(t3) / den3;
}

GridFunction transfer_apply(const GridFunction &f) {
    std::vector<double> values(f.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = transfer_eval(f, f.node(i));
    }
    return f.with_values(std::move(values));
}

double lambda_mass(const GridFunction &f, double a, double b) {
    if (!(0.0 <= a && a <= b && b <= 1.0)) {
        throw DomainError("lambda_mass expects 0 <= a <= b <= 1");
    }
    const auto integrand = [&f](double t) { return f(t) * lambda_density(t); };
    if (f.rule() == QuadratureRule::Trapezoid) {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            const double lo = std::max(a, f.node(i));
            const double hi = std::min(b, f.node(i + 1));
            if (hi > lo) {
                total += 0.5 * (hi - lo) * (integrand(lo) + integrand(hi));
            }
        }
        return total;
    }
    std::vector<double> cuts{a, b};
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double t = f.node(i);
        if (t > a && t < b) {
            cuts.push_back(t);
        }
    }
    sort_unique(cuts);
    return integrate_pieces(integrand, cuts);
}

double lambda_mass_of_transfer(const GridFunction &f) {
    std::vector<double> cuts{0.0, 1.0 / 3.0, 0.5, 1.0};
    cuts.reserve(f.size() + 4);
    for (std::size_t i = 0; i < f.size(); ++i) {
        // the point u where the branch preimage of u equals this node
        const double t = f.node(i);
        double u;
        if (t < 1.0 / 3.0) {
            u = t / (1.0 - 2.0 * t);
        } else if (t < 0.5) {
            u = 1.0 / t - 2.0;
        } else {
            u = 2.0 - 1.0 / t;
        }
        if (u > 0.0 && u < 1.0) {
            cuts.push_back(u);
        }
    }
    sort_unique(cuts);
    return integrate_pieces([&f](double t) { return transfer_eval(f, t) * lambda_density(t); }, cuts);
}

std::array<double, 3> partition_masses(const GridFunction &f) {
    return {lambda_mass(f, 0.0, 1.0 / 3.0), lambda_mass(f, 1.0 / 3.0, 0.5), lambda_mass(f, 0.5, 1.0)};
}

std::vector<std::array<double, 3>> digit_distributions(std::size_t max_n, std::size_t nodes, double delta) {
    std::vector<std::array<double, 3>> out;
    GridFunction f = GridFunction::sample([](double) { return 1.0; }, nodes, delta);
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.push_back(partition_masses(f));
        if (n < max_n) {
            f = transfer_apply(f);
        }
    }
    return out;
}

std::array<double, 3> digit_distribution(std::size_t n, std::size_t nodes, double delta) {
    if (n == 0) {
        throw DomainError("digit index starts at 1");
    }
    return digit_distributions(n, nodes, delta).back();
}

} // namespace barning
