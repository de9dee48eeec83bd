#include <barning/ensemble.hpp>
#include <barning/euclid.hpp>
#include <barning/interval_map.hpp>
#include <barning/measure.hpp>
#include <barning/point_spec.hpp>
#include <barning/special.hpp>
#include <barning/transfer.hpp>
#include <barning/tree.hpp>
#include <barning/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace barning;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_verification = 2;

std::string triple_text(const Triple &t) {
    return t.a().get_str() + " " + t.b().get_str() + " " + t.c().get_str();
}

json triple_json(const Triple &t) {
    return json::array({t.a().get_str(), t.b().get_str(), t.c().get_str()});
}

std::string measure_text(const NuMeasure &m) {
    return m.infinite ? "inf" : std::to_string(m.value());
}

unsigned default_threads() {
    return std::max(1u, std::thread::hardware_concurrency());
}

RootSelection parse_roots(const std::string &text) {
    if (text == "oe") {
        return RootSelection::OE;
    }
    if (text == "eo") {
        return RootSelection::EO;
    }
    if (text == "both") {
        return RootSelection::Both;
    }
    throw DomainError("--roots must be oe, eo or both");
}

void print_json(const json &j) {
    std::cout << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Ternary expansions of Pythagorean triples and points of the unit circle"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer("Point specs:\n" + point_spec_help());

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // encode
    auto *encode_cmd = app.add_subcommand("encode", "expansion of a PPT, e.g. `encode 45 28 53`");
    std::string ea, eb, ec;
    encode_cmd->add_option("a", ea)->required();
    encode_cmd->add_option("b", eb)->required();
    encode_cmd->add_option("c", ec)->required();

    // decode
    auto *decode_cmd = app.add_subcommand("decode", "PPT of a finite expansion, e.g. `decode 22:oe`");
    std::string dtext;
    decode_cmd->add_option("expansion", dtext)->required();

    // tree
    auto *tree_cmd = app.add_subcommand("tree", "all PPTs with c <= N in depth-first order");
    std::uint64_t tree_n = 0;
    std::string tree_roots = "both";
    bool tree_count_only = false;
    tree_cmd->add_option("N", tree_n)->required();
    tree_cmd->add_option("--roots", tree_roots, "oe, eo or both")->capture_default_str();
    tree_cmd->add_flag("--count", tree_count_only, "print only the count");

    // sample
    auto *sample_cmd = app.add_subcommand("sample", "uniform random PPTs with c <= N");
    std::uint64_t sample_n = 0;
    std::size_t sample_count = 10;
    std::uint64_t sample_seed = 1;
    sample_cmd->add_option("N", sample_n)->required();
    sample_cmd->add_option("--count", sample_count)->capture_default_str();
    sample_cmd->add_option("--seed", sample_seed)->capture_default_str();

    // gcd
    auto *gcd_cmd = app.add_subcommand("gcd", "modified subtractive gcd");
    std::uint64_t gx = 0, gy = 0;
    bool gcd_trace = false;
    gcd_cmd->add_option("x", gx)->required();
    gcd_cmd->add_option("y", gy)->required();
    gcd_cmd->add_flag("--trace", gcd_trace, "print every state");

    // expand
    auto *expand_cmd = app.add_subcommand("expand", "certified digits of a point of (0,1)");
    std::string expand_point;
    ExpandOptions expand_opts;
    expand_cmd->add_option("point", expand_point, "point spec, see below")->required();
    expand_cmd->add_option("--digits", expand_opts.max_digits)->capture_default_str();
    expand_cmd->add_option("--budget", expand_opts.precision_budget, "maximum bits")->capture_default_str();

    // cylinder
    auto *cylinder_cmd = app.add_subcommand("cylinder", "interval and nu-measure of a cylinder");
    std::string cylinder_word;
    cylinder_cmd->add_option("word", cylinder_word)->required();

    // stats
    auto *stats_cmd = app.add_subcommand("stats", "digit statistics: Hopf ratio along an orbit or first-digit counts");
    std::string stats_point = "recip-pi";
    std::string stats_num = "12", stats_den = "13";
    std::uint64_t stats_steps = 1'000'000;
    std::uint64_t stats_first_digit = 0;
    unsigned stats_threads = default_threads();
    stats_cmd->add_option("--point", stats_point)->capture_default_str();
    stats_cmd->add_option("--num", stats_num)->capture_default_str();
    stats_cmd->add_option("--den", stats_den)->capture_default_str();
    stats_cmd->add_option("--steps", stats_steps)->capture_default_str();
    stats_cmd->add_option("--first-digit", stats_first_digit, "first-digit histogram of PPT_N instead");
    stats_cmd->add_option("--threads", stats_threads)->capture_default_str();

    // density
    auto *density_cmd = app.add_subcommand("density", "densities as CSV: coprime, arc, digits");
    std::string density_kind;
    std::uint64_t density_n = 10'000;
    std::size_t density_points = 100;
    unsigned density_threads = default_threads();
    density_cmd->add_option("kind", density_kind, "coprime | arc | digits")
        ->required()
        ->check(CLI::IsMember({"coprime", "arc", "digits"}));
    density_cmd->add_option("-n", density_n, "radius, max c, or number of transfer iterations")
        ->capture_default_str();
    density_cmd->add_option("--points", density_points, "angles for arc")->capture_default_str();
    density_cmd->add_option("--threads", density_threads)->capture_default_str();

    // period
    auto *period_cmd = app.add_subcommand("period", "eventual period of a quadratic surd's expansion");
    std::string period_point;
    std::size_t period_horizon = default_period_horizon;
    period_cmd->add_option("surd", period_point, "sqrt:D:P:Q:R")->required();
    period_cmd->add_option("--horizon", period_horizon)->capture_default_str();

    // verify-all
    auto *verify_cmd = app.add_subcommand("verify-all", "run the acceptance checks");
    verify::Options vopts;
    std::string vscale = "quick";
    std::string vcorrupt;
    bool vjacobian = false;
    std::vector<int> vonly;
    vopts.threads = default_threads();
    verify_cmd->add_option("--scale", vscale, "quick or full")->capture_default_str();
    verify_cmd->add_option("--seed", vopts.seed)->capture_default_str();
    verify_cmd->add_option("--threads", vopts.threads)->capture_default_str();
    verify_cmd->add_option("--corrupt-matrix", vcorrupt, "e.g. M2:0:1:+1");
    verify_cmd->add_flag("--corrupt-jacobian", vjacobian, "use 1/(1+t)^2 in the invariance equation");
    verify_cmd->add_option("--only", vonly, "criterion ids to run")->check(CLI::Range(1, verify::criterion_count));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_domain;
    }

    try {
        if (*encode_cmd) {
            const Expansion e = encode(Triple(BigInt(ea), BigInt(eb), BigInt(ec)));
            if (as_json) {
                print_json({{"expansion", e.to_string()}, {"length", e.length()}});
            } else {
                std::cout << e.to_string() << '\n';
            }
        } else if (*decode_cmd) {
            const Expansion e = Expansion::parse(dtext);
            if (!e.is_finite()) {
                throw DomainError("decode needs a finite expansion such as 13:oe");
            }
            const Triple t = decode(e);
            if (as_json) {
                print_json({{"triple", triple_json(t)}});
            } else {
                std::cout << triple_text(t) << '\n';
            }
        } else if (*tree_cmd) {
            const RootSelection roots = parse_roots(tree_roots);
            if (tree_count_only) {
                const auto n = count_by_c(BigInt(static_cast<unsigned long>(tree_n)), roots);
                if (as_json) {
                    print_json({{"max_c", tree_n}, {"count", n}});
                } else {
                    std::cout << n << '\n';
                }
            } else if (as_json) {
                json rows = json::array();
                enumerate_by_c(BigInt(static_cast<unsigned long>(tree_n)), roots, [&](const TreeCursor &cur) {
                    rows.push_back({{"triple", triple_json(cur.triple)}, {"expansion", cur.path.to_string()}});
                });
                print_json(rows);
            } else {
                enumerate_by_c(BigInt(static_cast<unsigned long>(tree_n)), roots, [](const TreeCursor &cur) {
                    std::cout << triple_text(cur.triple) << ' ' << cur.path.to_string() << '\n';
                });
            }
        } else if (*sample_cmd) {
            const auto draws = uniform_sample(sample_n, sample_count, sample_seed);
            if (as_json) {
                json rows = json::array();
                for (const Triple &t : draws) {
                    rows.push_back(triple_json(t));
                }
                print_json({{"max_c", sample_n}, {"seed", sample_seed}, {"triples", rows}});
            } else {
                for (const Triple &t : draws) {
                    std::cout << triple_text(t) << '\n';
                }
            }
        } else if (*gcd_cmd) {
            const EuclidResult r = euclid_gcd(gx, gy, gcd_trace || as_json);
            if (as_json) {
                json states = json::array();
                for (const EuclidState &s : r.trace) {
                    states.push_back({s.x, s.y});
                }
                print_json({{"gcd", r.gcd}, {"steps", r.steps}, {"trace", states}});
            } else {
                if (gcd_trace) {
                    std::cout << format_trace(r.trace) << '\n';
                }
                std::cout << "gcd " << r.gcd << '\n';
            }
        } else if (*expand_cmd) {
            const Expansion e = expand(parse_point(expand_point), expand_opts);
            if (as_json) {
                print_json({{"point", expand_point},
                            {"expansion", e.to_string()},
                            {"digits", e.length()},
                            {"finite", e.is_finite()}});
            } else {
                std::cout << e.to_string() << '\n';
            }
        } else if (*cylinder_cmd) {
            const DigitWord w = parse_word(cylinder_word);
            const CylinderInterval c = cylinder(w);
            const NuMeasure m = cylinder_measure(w);
            if (as_json) {
                print_json({{"word", cylinder_word},
                            {"lo", c.lo.to_string()},
                            {"hi", c.hi.to_string()},
                            {"nu_infinite", m.infinite},
                            {"nu_log_argument", m.log_argument.to_string()},
                            {"nu", m.infinite ? json(nullptr) : json(m.value())}});
            } else {
                std::cout << c.lo.to_string() << ' ' << c.hi.to_string() << ' ' << measure_text(m) << '\n';
            }
        } else if (*stats_cmd) {
            if (stats_first_digit > 0) {
                const DigitHistogram h = first_digit_histogram(stats_first_digit, stats_threads);
                const auto freq = h.frequencies();
                const auto limit = first_digit_limit();
                if (as_json) {
                    print_json({{"max_c", stats_first_digit},
                                {"total", h.total},
                                {"counts", h.digits},
                                {"terminal", h.terminal},
                                {"frequencies", freq},
                                {"limit", limit}});
                } else {
                    std::cout << "digit,count,frequency,limit\n";
                    for (int d = 0; d < 3; ++d) {
                        std::cout << d + 1 << ',' << h.digits[d] << ',' << freq[d] << ',' << limit[d] << '\n';
                    }
                }
            } else {
                const HopfResult r =
                    hopf_ratio(parse_point(stats_point), parse_word(stats_num), parse_word(stats_den), stats_steps);
                const double expected = measure_ratio(cylinder_measure(parse_word(stats_num)),
                                                      cylinder_measure(parse_word(stats_den)));
                if (as_json) {
                    print_json({{"point", stats_point},
                                {"steps", r.steps},
                                {"numerator_count", r.numerator_count},
                                {"denominator_count", r.denominator_count},
                                {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)},
                                {"status", to_string(r.status)},
                                {"measure_ratio", expected}});
                } else {
                    std::cout << "steps " << r.steps << "\nnumerator " << r.numerator_count << "\ndenominator "
                              << r.denominator_count << "\nratio "
                              << (r.ratio ? std::to_string(*r.ratio) : to_string(r.status)) << "\nmeasure_ratio "
                              << expected << '\n';
                }
            }
        } else if (*density_cmd) {
            if (density_kind == "coprime") {
                const CoprimeDensity d = coprime_density(density_n);
                if (as_json) {
                    print_json({{"radius", d.radius},
                                {"coprime_pairs", d.coprime_pairs},
                                {"lattice_pairs", d.lattice_pairs},
                                {"ratio", d.ratio}});
                } else {
                    std::cout << "radius,coprime_pairs,lattice_pairs,ratio\n"
                              << d.radius << ',' << d.coprime_pairs << ',' << d.lattice_pairs << ',' << d.ratio
                              << '\n';
                }
            } else if (density_kind == "arc") {
                const auto grid = uniform_angle_grid(density_points);
                const ArcDistribution a = arc_distribution(density_n, grid, density_threads);
                if (as_json) {
                    json pts = json::array();
                    for (const ArcPoint &p : a.points) {
                        pts.push_back({p.t, p.empirical, p.reference});
                    }
                    print_json({{"max_c", density_n},
                                {"population", a.population},
                                {"sup_deviation", a.sup_deviation},
                                {"points", pts}});
                } else {
                    std::printf("t,empirical,reference\n");
                    for (const ArcPoint &p : a.points) {
                        std::printf("%.12g,%.12g,%.12g\n", p.t, p.empirical, p.reference);
                    }
                }
            } else {
                const auto dists = digit_distributions(density_n);
                if (as_json) {
                    print_json({{"iterations", density_n}, {"masses", dists}});
                } else {
                    std::printf("n,digit1,digit2,digit3\n");
                    for (std::size_t n = 0; n < dists.size(); ++n) {
                        std::printf("%zu,%.15g,%.15g,%.15g\n", n + 1, dists[n][0], dists[n][1], dists[n][2]);
                    }
                }
            }
        } else if (*period_cmd) {
            const Point p = parse_point(period_point);
            if (!std::holds_alternative<Surd>(p)) {
                throw DomainError("period expects an irrational surd, sqrt:D:P:Q:R");
            }
            const auto report = detect_period(std::get<Surd>(p), period_horizon);
            if (as_json) {
                print_json(report ? json{{"point", period_point},
                                         {"found", true},
                                         {"preperiod", report->preperiod},
                                         {"period", report->period},
                                         {"word", word_to_string(report->word)}}
                                  : json{{"point", period_point}, {"found", false}, {"horizon", period_horizon}});
            } else if (report) {
                std::cout << "preperiod " << report->preperiod << "\nperiod " << report->period << "\nword "
                          << word_to_string(report->word) << '\n';
            } else {
                std::cout << "no period within " << period_horizon << " steps\n";
            }
        } else if (*verify_cmd) {
            vopts.scale = verify::parse_scale(vscale);
            if (!vcorrupt.empty()) {
                vopts.mutation.matrix = verify::parse_corruption(vcorrupt);
            }
            vopts.mutation.jacobian = vjacobian;

            std::vector<verify::CriterionReport> reports;
            if (vonly.empty()) {
                for (int id = 1; id <= verify::criterion_count; ++id) {
                    vonly.push_back(id);
                }
            }
            for (int id : vonly) {
                reports.push_back(verify::run_criterion(id, vopts));
                if (!as_json) {
                    const auto &r = reports.back();
                    std::printf("%s criterion %d: %s (%.1f s)\n", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(),
                                r.seconds);
                    for (const auto &c : r.checks) {
                        std::printf("    %s %s = %.6g (reference %.6g, tolerance %.3g)\n", c.pass ? "ok  " : "FAIL",
                                    c.quantity.c_str(), c.value, c.reference_value, c.tolerance);
                    }
                    std::fflush(stdout);
                }
            }
            const json report = verify::report_json(reports, vopts);
            if (as_json) {
                print_json(report);
            }
            return report.at("pass").get<bool>() ? exit_ok : exit_verification;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_ok;
}
