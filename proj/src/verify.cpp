#include <barning/verify.hpp>

#include <barning/ensemble.hpp>
#include <barning/euclid.hpp>
#include <barning/interval_map.hpp>
#include <barning/point_spec.hpp>
#include <barning/special.hpp>
#include <barning/transfer.hpp>
#include <barning/tree.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace barning::verify {

using nlohmann::json;

namespace {

json finite_or_null(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

double json_number(const json &v) {
    return v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>();
}

CheckResult count_check(std::string quantity, json parameters, std::uint64_t failures) {
    return CheckResult{std::move(quantity), std::move(parameters), static_cast<double>(failures), 0.0, 0.0,
                       failures == 0};
}

CheckResult bound_check(std::string quantity, json parameters, double value, double reference, double tolerance) {
    const bool pass = std::isfinite(value) && std::abs(value - reference) <= tolerance;
    return CheckResult{std::move(quantity), std::move(parameters), value, reference, tolerance, pass};
}

std::mt19937_64 rng_for(const Options &o, int id) {
    std::seed_seq seq{o.seed, static_cast<std::uint64_t>(id)};
    return std::mt19937_64(seq);
}

bool full(const Options &o) {
    return o.scale == Scale::Full;
}

// --- 1: codec roundtrip ------------------------------------------------------

CheckResult roundtrip_check(const Options &o, const MatrixSet &matrices) {
    const std::uint64_t max_c = full(o) ? 100'000 : 10'000;
    std::uint64_t triples = 0, failures = 0;
    enumerate_by_c(BigInt(static_cast<unsigned long>(max_c)), RootSelection::Both, [&](const TreeCursor &cur) {
        ++triples;
        try {
            if (!(decode(encode(cur.triple), matrices) == cur.triple)) {
                ++failures;
            }
        } catch (const DomainError &) {
            ++failures;
        }
    });
    return count_check("roundtrip_failures", {{"max_c", max_c}, {"triples", triples}}, failures);
}

// --- 2: example table --------------------------------------------------------

struct Fixture {
    long a, b, c;
    const char *expansion;
};

constexpr Fixture example_table[] = {
    {3, 4, 5, ":oe"},       {4, 3, 5, ":eo"},       {15, 8, 17, "1:oe"},    {21, 20, 29, "2:oe"},
    {5, 12, 13, "3:oe"},    {35, 12, 37, "11:oe"},  {77, 36, 85, "12:oe"},  {45, 28, 53, "13:oe"},
    {65, 72, 97, "21:oe"},  {119, 120, 169, "22:oe"}, {55, 48, 73, "23:oe"}, {33, 56, 65, "31:oe"},
    {39, 80, 89, "32:oe"},  {7, 24, 25, "33:oe"},
};

CheckResult fixture_check(const MatrixSet &matrices) {
    std::uint64_t failures = 0;
    json mismatches = json::array();
    for (const Fixture &f : example_table) {
        const Triple t(f.a, f.b, f.c);
        const Expansion e = Expansion::parse(f.expansion);
        bool ok = encode(t) == e;
        try {
            ok = ok && decode(e, matrices) == t;
        } catch (const DomainError &) {
            ok = false;
        }
        if (!ok) {
            ++failures;
            mismatches.push_back(f.expansion);
        }
    }
    return count_check("example_table_mismatches",
                       {{"fixtures", std::size(example_table)}, {"mismatched", mismatches}}, failures);
}

// --- 3: closed forms ---------------------------------------------------------

DigitWord repeated(Digit d, unsigned n) {
    return DigitWord(n, d);
}

std::vector<CheckResult> closed_form_checks(const MatrixSet &matrices) {
    std::vector<CheckResult> out;
    const auto compare = [&](const char *name, Digit d, unsigned max_n, Triple (*family)(unsigned)) {
        std::uint64_t failures = 0;
        for (unsigned n = 0; n <= max_n; ++n) {
            try {
                if (!(family(n) == decode(Expansion::finite(repeated(d, n), Digit::OE), matrices))) {
                    ++failures;
                }
            } catch (const DomainError &) {
                ++failures;
            }
        }
        out.push_back(count_check(name, {{"max_n", max_n}}, failures));
    };
    compare("family_ones_mismatches", Digit::D1, 50, family_ones);
    compare("family_twos_mismatches", Digit::D2, 30, family_twos);

    const long a_terms[] = {3, 21, 119, 697};
    const long c_terms[] = {5, 29, 169, 985};
    std::uint64_t failures = 0;
    for (unsigned n = 0; n < 4; ++n) {
        const Triple t = family_twos(n);
        if (t.a() != a_terms[n] || t.c() != c_terms[n]) {
            ++failures;
        }
    }
    out.push_back(count_check("family_twos_initial_terms", {{"a", a_terms}, {"c", c_terms}}, failures));
    return out;
}

// --- 4: euclid ---------------------------------------------------------------

std::vector<CheckResult> euclid_checks(const Options &o) {
    std::vector<CheckResult> out;
    const std::string expected = "(155,100) -> (100,45) -> (45,10) -> (25,10) -> (10,5) -> (5,0)";
    const EuclidResult sample = euclid_gcd(155, 100);
    const std::string trace = format_trace(sample.trace);
    out.push_back(count_check("sample_trace_mismatch", {{"trace", trace}, {"expected", expected}},
                              trace == expected && sample.gcd == 5 ? 0 : 1));

    auto rng = rng_for(o, 4);
    std::uint64_t failures = 0;
    const int pairs = 10'000;
    for (int i = 0; i < pairs; ++i) {
        std::uint64_t x = rng(), y = rng();
        if (x == 0 && y == 0) {
            x = 1;
        }
        if (euclid_gcd(x, y, false).gcd != std::gcd(x, y)) {
            ++failures;
        }
    }
    out.push_back(count_check("random_gcd_mismatches", {{"pairs", pairs}, {"bits", 64}}, failures));

    std::uint64_t tested = 0;
    failures = 0;
    for (std::uint64_t x = 2; x <= 500; ++x) {
        for (std::uint64_t y = 1; y < x; ++y) {
            if (std::gcd(x, y) != 1) {
                continue;
            }
            const Rat t(static_cast<long>(y), static_cast<long>(x));
            if (t == Rat(1, 3) || t == Rat(1, 2)) {
                continue;
            }
            ++tested;
            const EuclidState next = euclid_step({x, y});
            if (!(step(t).image == Rat(static_cast<long>(next.y), static_cast<long>(next.x)))) {
                ++failures;
            }
        }
    }
    out.push_back(count_check("scaling_identity_failures", {{"max_x", 500}, {"pairs", tested}}, failures));
    return out;
}

// --- 5: invariance -----------------------------------------------------------

// Van der Corput points mapped into [1/1000, 999/1000]; exact dyadic rationals.
std::vector<Rat> quasi_random_points(std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
        BigInt num = 0, den = 1;
        for (std::size_t v = k; v > 0; v >>= 1) {
            num = 2 * num + static_cast<unsigned long>(v & 1);
            den *= 2;
        }
        // bits were pushed most-significant-last, which is the base-2 radical inverse
        out.push_back(Rat(1, 1000) + Rat(998, 1000) * Rat(num, den));
    }
    return out;
}

CheckResult invariance_check(const InvarianceEquation &eq) {
    const RationalDensity f = [](const Rat &t) { return (t * (Rat(1) - t)).reciprocal(); };
    double worst = 0.0;
    for (const Rat &t : quasi_random_points(1000)) {
        worst = std::max(worst, invariance_residual(f, t, eq).to_double());
    }
    return bound_check("invariance_residual_max", {{"points", 1000}, {"range", {1e-3, 1.0 - 1e-3}}}, worst, 0.0,
                       1e-12);
}

CheckResult pushforward_check_all() {
    double worst = 0.0;
    for (const Rat &t : quasi_random_points(1000)) {
        worst = std::max(worst, pushforward_check(t));
    }
    return bound_check("pushforward_residual_max", {{"points", 1000}, {"precision_bits", 256}}, worst, 0.0, 1e-12);
}

// --- 6: cylinder measures ----------------------------------------------------

std::vector<CheckResult> cylinder_checks(const Options &o) {
    std::vector<CheckResult> out;
    auto rng = rng_for(o, 6);
    std::uniform_int_distribution<long> pick(10'000, 990'000);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        long p = pick(rng), q = pick(rng);
        while (q == p) {
            q = pick(rng);
        }
        const Rat a(std::min(p, q), 1'000'000), b(std::max(p, q), 1'000'000);
        const double closed = nu_interval(a, b).value();
        const double numeric = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [](double t) { return nu_density(t); }, a.to_double(), b.to_double(), 15, 1e-15);
        worst = std::max(worst, std::abs(closed - numeric));
    }
    out.push_back(bound_check("nu_interval_vs_quadrature_max", {{"intervals", 100}, {"range", {0.01, 0.99}}}, worst,
                              0.0, 1e-10));

    const NuMeasure a12 = cylinder_measure(parse_word("12"));
    const NuMeasure a13 = cylinder_measure(parse_word("13"));
    const bool exact = !a12.infinite && !a13.infinite && a12.log_argument == Rat(4, 3) && a13.log_argument == Rat(3, 2);
    out.push_back(count_check("cylinder_ratio_closed_form",
                              {{"A12_log_argument", a12.log_argument.to_string()},
                               {"A13_log_argument", a13.log_argument.to_string()}},
                              exact ? 0 : 1));
    out.push_back(bound_check("cylinder_ratio_value", {{"numerator", "12"}, {"denominator", "13"}},
                              measure_ratio(a12, a13), 0.70927, 3e-4));
    return out;
}

// --- 7: Hopf ratio -----------------------------------------------------------

std::vector<CheckResult> hopf_checks(const Options &o) {
    const std::uint64_t steps = full(o) ? 10'000'000 : 1'000'000;
    const double reference = std::log(4.0 / 3.0) / std::log(1.5);
    const auto start = std::chrono::steady_clock::now();
    const HopfResult r = hopf_ratio(parse_point("recip-pi"), parse_word("12"), parse_word("13"), steps);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<CheckResult> out;
    const double ratio = r.ratio.value_or(std::numeric_limits<double>::quiet_NaN());
    out.push_back(bound_check("hopf_ratio",
                              {{"point", "recip-pi"},
                               {"numerator", "12"},
                               {"denominator", "13"},
                               {"steps", r.steps},
                               {"numerator_count", r.numerator_count},
                               {"denominator_count", r.denominator_count},
                               {"status", to_string(r.status)},
                               {"relative_tolerance", 0.05}},
                              ratio, reference, 0.05 * reference));
    out.push_back(CheckResult{"hopf_runtime_seconds", {{"steps", steps}}, seconds, 0.0, 300.0,
                              seconds <= 300.0 && r.steps == steps});
    return out;
}

// --- 8: lattice statistics and tree counts --------------------------------------

std::vector<CheckResult> density_checks(const Options &o) {
    std::vector<CheckResult> out;
    const double four_over_pi2 = 4.0 / (std::numbers::pi * std::numbers::pi);
    const std::uint64_t radius = full(o) ? 10'000 : 1'000;
    const double rel = full(o) ? 0.005 : 0.02;
    const CoprimeDensity cd = coprime_density(radius);
    out.push_back(bound_check("coprime_density",
                              {{"radius", radius},
                               {"coprime_pairs", cd.coprime_pairs},
                               {"lattice_pairs", cd.lattice_pairs},
                               {"relative_tolerance", rel}},
                              cd.ratio, four_over_pi2, rel * four_over_pi2));

    const std::uint64_t max_c = full(o) ? 1'000'000 : 100'000;
    const auto grid = uniform_angle_grid(999);
    const ArcDistribution arc = arc_distribution(max_c, grid, o.threads);
    out.push_back(bound_check("arc_distribution_sup_deviation",
                              {{"max_c", max_c}, {"population", arc.population}, {"angles", grid.size()}},
                              arc.sup_deviation, 0.0, 1e-2));

    // brute-force leg scan for c <= 1000
    const long limit = 1000;
    std::vector<std::uint64_t> brute(limit + 1, 0);
    std::set<std::tuple<long, long, long>> brute_set;
    for (long a = 1; a <= limit; ++a) {
        for (long b = 1; a * a + b * b <= limit * limit; ++b) {
            const long c2 = a * a + b * b;
            const long c = std::lround(std::sqrt(static_cast<double>(c2)));
            if (c * c == c2 && std::gcd(a, b) == 1) {
                ++brute[static_cast<std::size_t>(c)];
                brute_set.emplace(a, b, c);
            }
        }
    }
    std::vector<std::uint64_t> tree(limit + 1, 0);
    std::set<std::tuple<long, long, long>> tree_set;
    std::uint64_t duplicates = 0;
    enumerate_by_c(BigInt(limit), RootSelection::Both, [&](const TreeCursor &cur) {
        const long c = cur.triple.c().get_si();
        ++tree[static_cast<std::size_t>(c)];
        if (!tree_set.emplace(cur.triple.a().get_si(), cur.triple.b().get_si(), c).second) {
            ++duplicates;
        }
    });
    std::uint64_t mismatched_n = 0;
    std::uint64_t brute_total = 0, tree_total = 0;
    for (long n = 1; n <= limit; ++n) {
        brute_total += brute[static_cast<std::size_t>(n)];
        tree_total += tree[static_cast<std::size_t>(n)];
        if (n >= 5 && brute_total != tree_total) {
            ++mismatched_n;
        }
    }
    const std::uint64_t failures = mismatched_n + duplicates + (brute_set == tree_set ? 0 : 1);
    out.push_back(count_check("tree_count_mismatches",
                              {{"max_c", limit}, {"tree_total", tree_total}, {"brute_total", brute_total}}, failures));
    return out;
}

// --- 9: transfer operator ----------------------------------------------------

std::vector<CheckResult> transfer_checks(const Options &o) {
    std::vector<CheckResult> out;
    constexpr std::size_t nodes = 10'000;
    constexpr double delta = 1e-4;
    auto rng = rng_for(o, 9);
    std::uniform_real_distribution<double> coef(-1.0, 1.0), phase(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        std::array<double, 5> a{}, p{};
        for (int k = 0; k < 5; ++k) {
            a[k] = coef(rng);
            p[k] = phase(rng);
        }
        const GridFunction f = GridFunction::sample(
            [&](double t) {
                double v = 1.0;
                for (int k = 0; k < 5; ++k) {
                    v += 0.1 * a[k] * std::cos((k + 1) * std::numbers::pi * t + p[k]);
                }
                return v;
            },
            nodes, delta);
        worst = std::max(worst, std::abs(lambda_mass_of_transfer(f) - lambda_mass(f)));
    }
    out.push_back(bound_check("transfer_mass_defect_max", {{"densities", 10}, {"nodes", nodes}, {"delta", delta}},
                              worst, 0.0, 1e-8));

    const double scale = std::numbers::pi / (4.0 * std::numbers::sqrt2);
    const auto invariant = [scale](double t) { return scale * (1.0 + t * t) / (t * (1.0 - t)); };
    const GridFunction f = GridFunction::sample(invariant, nodes, delta);
    const GridFunction hf = transfer_apply(f);
    double err = 0.0;
    for (std::size_t i = 0; i < hf.size(); ++i) {
        const double t = hf.node(i);
        if (t >= 1e-2 && t <= 1.0 - 1e-2) {
            err = std::max(err, std::abs(hf.values()[i] - f.values()[i]));
        }
    }
    out.push_back(
        bound_check("invariant_density_defect_max", {{"nodes", nodes}, {"range", {1e-2, 1.0 - 1e-2}}}, err, 0.0, 1e-6));

    const auto dists = digit_distributions(10, nodes, delta);
    double asym = 0.0;
    json middle = json::array();
    for (const auto &d : dists) {
        asym = std::max(asym, std::abs(d[0] - d[2]));
        middle.push_back(d[1]);
    }
    out.push_back(bound_check("digit_symmetry_defect_max", {{"max_n", 10}, {"middle_arc_mass", middle}}, asym, 0.0,
                              1e-8));
    return out;
}

// --- 10: special expansions --------------------------------------------------

std::vector<CheckResult> special_checks() {
    std::vector<CheckResult> out;
    const PatternCheck cos1 = verify_cos_patterns(CosPattern::Cos1, 4);
    out.push_back(count_check("cos1_prefix_mismatch",
                              {{"digits", cos1.expected.size()},
                               {"observed", word_to_string(cos1.observed)},
                               {"expected", word_to_string(cos1.expected)}},
                              cos1.pass ? 0 : 1));
    const PatternCheck half = verify_cos_patterns(CosPattern::CosHalf, 3);
    out.push_back(count_check("cos_half_pattern_mismatch",
                              {{"k_blocks", 3},
                               {"observed", word_to_string(half.observed)},
                               {"expected", word_to_string(half.expected)}},
                              half.pass ? 0 : 1));

    ExpandOptions opts;
    opts.max_digits = 64;
    const Expansion sqrt2 = expand(parse_point("sqrt:2:-1:1:1"), opts);
    const auto twos = std::count(sqrt2.digits().begin(), sqrt2.digits().end(), Digit::D2);
    out.push_back(count_check("sqrt2_minus_1_non_two_digits", {{"digits", 64}},
                              static_cast<std::uint64_t>(64 - twos)));

    struct Expected {
        const char *point;
        std::size_t preperiod, period;
        const char *word;
    };
    const Expected surds[] = {
        {"sqrt:2:-1:1:1", 0, 1, "2"},  {"sqrt:3:0:1:3", 0, 2, "31"},   {"sqrt:3:2:-1:1", 0, 2, "13"},
        {"sqrt:5:-2:1:1", 0, 2, "12"}, {"sqrt:5:-1:1:2", 0, 2, "32"},  {"sqrt:10:-3:1:1", 0, 3, "112"},
    };
    std::uint64_t failures = 0;
    json found = json::array();
    for (const Expected &e : surds) {
        const auto report = detect_period(std::get<Surd>(parse_point(e.point)));
        if (!report) {
            ++failures;
            found.push_back({{"point", e.point}, {"found", false}});
            continue;
        }
        found.push_back({{"point", e.point},
                         {"preperiod", report->preperiod},
                         {"period", report->period},
                         {"word", word_to_string(report->word)}});
        if (report->preperiod != e.preperiod || report->period != e.period || word_to_string(report->word) != e.word) {
            ++failures;
        }
    }
    out.push_back(count_check("period_detection_mismatches", {{"surds", found}}, failures));
    return out;
}

// --- 11: mutation controls ---------------------------------------------------

std::vector<CheckResult> mutation_checks(const Options &o) {
    // criteria 1, 5 (invariance half) and 6 on a given mutation
    const auto guarded = [&](const Mutation &m) {
        std::vector<CheckResult> checks;
        checks.push_back(roundtrip_check(o, mutated_matrices(m)));
        checks.push_back(invariance_check(mutated_equation(m)));
        for (auto &c : cylinder_checks(o)) {
            checks.push_back(std::move(c));
        }
        return checks;
    };
    const auto all_pass = [](const std::vector<CheckResult> &checks) {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
    };

    std::vector<CheckResult> out;
    const bool baseline = all_pass(guarded(Mutation{}));
    out.push_back(count_check("unmutated_baseline_failures", {{"criteria", {1, 5, 6}}}, baseline ? 0 : 1));

    std::vector<Mutation> mutations;
    for (int m = 1; m <= 3; ++m) {
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                mutations.push_back(Mutation{MatrixCorruption{m, r, c, 1}, false});
            }
        }
    }
    mutations.push_back(Mutation{std::nullopt, true});

    std::uint64_t survivors = 0;
    json survived = json::array();
    for (const Mutation &m : mutations) {
        if (all_pass(guarded(m))) {
            ++survivors;
            survived.push_back(m.matrix ? to_string(*m.matrix) : "jacobian");
        }
    }
    out.push_back(count_check("surviving_mutations", {{"mutations", mutations.size()}, {"survived", survived}},
                              survivors));
    return out;
}

} // namespace

Scale parse_scale(std::string_view text) {
    if (text == "quick") {
        return Scale::Quick;
    }
    if (text == "full") {
        return Scale::Full;
    }
    throw DomainError("scale must be quick or full");
}

std::string to_string(Scale scale) {
    return scale == Scale::Quick ? "quick" : "full";
}

void to_json(json &out, const CheckResult &c) {
    out = json{{"quantity", c.quantity},
               {"parameters", c.parameters},
               {"value", finite_or_null(c.value)},
               {"reference_value", finite_or_null(c.reference_value)},
               {"tolerance", finite_or_null(c.tolerance)},
               {"pass", c.pass}};
}

void from_json(const json &in, CheckResult &c) {
    c.quantity = in.at("quantity").get<std::string>();
    c.parameters = in.at("parameters");
    c.value = json_number(in.at("value"));
    c.reference_value = json_number(in.at("reference_value"));
    c.tolerance = json_number(in.at("tolerance"));
    c.pass = in.at("pass").get<bool>();
}

MatrixCorruption parse_corruption(std::string_view text) {
    // M<k>:<row>:<col>:<delta>
    MatrixCorruption c;
    std::string s(text);
    if (s.size() < 2 || (s[0] != 'M' && s[0] != 'm')) {
        throw DomainError("corruption must look like M2:0:1:+1");
    }
    char sep1 = 0, sep2 = 0, sep3 = 0;
    std::istringstream in(s.substr(1));
    if (!(in >> c.matrix >> sep1 >> c.row >> sep2 >> c.col >> sep3 >> c.delta) || sep1 != ':' || sep2 != ':' ||
        sep3 != ':' || !in.eof()) {
        throw DomainError("corruption must look like M2:0:1:+1");
    }
    if (c.matrix < 1 || c.matrix > 3 || c.row < 0 || c.row > 2 || c.col < 0 || c.col > 2 || c.delta == 0) {
        throw DomainError("corruption out of range: matrix 1..3, row/col 0..2, non-zero delta");
    }
    return c;
}

std::string to_string(const MatrixCorruption &c) {
    return "M" + std::to_string(c.matrix) + ":" + std::to_string(c.row) + ":" + std::to_string(c.col) + ":" +
           (c.delta > 0 ? "+" : "") + std::to_string(c.delta);
}

MatrixSet mutated_matrices(const Mutation &m) {
    MatrixSet out = barning_matrices();
    if (m.matrix) {
        const MatrixCorruption &c = *m.matrix;
        out[static_cast<std::size_t>(c.matrix - 1)]
            .entries[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] += c.delta;
    }
    return out;
}

InvarianceEquation mutated_equation(const Mutation &m) {
    InvarianceEquation eq = invariance_equation();
    if (m.jacobian) {
        eq[0].jacobian_c = 1;
    }
    return eq;
}

bool CriterionReport::pass() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

void to_json(json &out, const CriterionReport &r) {
    out = json{{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"seconds", r.seconds}, {"checks", r.checks}};
}

std::string criterion_title(int id) {
    static const std::map<int, std::string> titles = {
        {1, "codec roundtrip"},
        {2, "example table"},
        {3, "closed-form families"},
        {4, "subtractive euclid"},
        {5, "invariance and pushforward"},
        {6, "cylinder measures"},
        {7, "hopf ratio"},
        {8, "coprime density, arc distribution, tree counts"},
        {9, "transfer operator"},
        {10, "special expansions"},
        {11, "mutation controls"},
    };
    const auto it = titles.find(id);
    if (it == titles.end()) {
        throw DomainError("criteria are numbered 1 to " + std::to_string(criterion_count));
    }
    return it->second;
}

CriterionReport run_criterion(int id, const Options &o) {
    CriterionReport report;
    report.id = id;
    report.title = criterion_title(id);
    const auto start = std::chrono::steady_clock::now();
    const auto append = [&report](std::vector<CheckResult> checks) {
        for (auto &c : checks) {
            report.checks.push_back(std::move(c));
        }
    };
    try {
        switch (id) {
        case 1:
            report.checks.push_back(roundtrip_check(o, mutated_matrices(o.mutation)));
            break;
        case 2:
            report.checks.push_back(fixture_check(mutated_matrices(o.mutation)));
            break;
        case 3:
            append(closed_form_checks(mutated_matrices(o.mutation)));
            break;
        case 4:
            append(euclid_checks(o));
            break;
        case 5:
            report.checks.push_back(invariance_check(mutated_equation(o.mutation)));
            report.checks.push_back(pushforward_check_all());
            break;
        case 6:
            append(cylinder_checks(o));
            break;
        case 7:
            append(hopf_checks(o));
            break;
        case 8:
            append(density_checks(o));
            break;
        case 9:
            append(transfer_checks(o));
            break;
        case 10:
            append(special_checks());
            break;
        case 11:
            append(mutation_checks(o));
            break;
        default:
            break;
        }
    } catch (const std::exception &e) {
        report.checks.push_back(CheckResult{"exception", {{"what", e.what()}}, 1.0, 0.0, 0.0, false});
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<CriterionReport> run_all(const Options &o) {
    std::vector<CriterionReport> out;
    for (int id = 1; id <= criterion_count; ++id) {
        out.push_back(run_criterion(id, o));
    }
    return out;
}

json report_json(const std::vector<CriterionReport> &reports, const Options &o) {
    json mutation = nullptr;
    if (o.mutation.active()) {
        mutation = json{{"matrix", o.mutation.matrix ? json(to_string(*o.mutation.matrix)) : json(nullptr)},
                        {"jacobian", o.mutation.jacobian}};
    }
    const bool pass = std::all_of(reports.begin(), reports.end(), [](const CriterionReport &r) { return r.pass(); });
    return json{{"scale", to_string(o.scale)},
                {"seed", o.seed},
                {"mutation", mutation},
                {"criteria", reports},
                {"pass", pass}};
}

} // namespace barning::verify
