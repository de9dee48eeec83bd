// Runs acceptance criteria 1-11 at full scale and prints one line per criterion.
//   acceptance [--quick] [--json FILE] [id ...]

#include <barning/verify.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

using namespace barning::verify;

int main(int argc, char **argv) {
    Options options;
    options.scale = Scale::Full;
    std::string json_path;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--quick") {
            options.scale = Scale::Quick;
        } else if (arg == "--json" && i + 1 < argc) {
            json_path = argv[++i];
        } else {
            ids.push_back(std::atoi(arg.c_str()));
        }
    }
    if (ids.empty()) {
        for (int id = 1; id <= criterion_count; ++id) {
            ids.push_back(id);
        }
    }

    std::vector<CriterionReport> reports;
    for (int id : ids) {
        reports.push_back(run_criterion(id, options));
        const CriterionReport &r = reports.back();
        for (const CheckResult &c : r.checks) {
            std::printf("    %-4s %s = %.6g (reference %.6g, tolerance %.3g)\n", c.pass ? "ok" : "FAIL",
                        c.quantity.c_str(), c.value, c.reference_value, c.tolerance);
        }
        std::printf("%s criterion %d: %s [%.1f s]\n", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
        std::fflush(stdout);
    }

    const auto report = report_json(reports, options);
    if (!json_path.empty()) {
        std::ofstream(json_path) << report.dump(2) << '\n';
    }
    int failed = 0;
    for (const auto &r : reports) {
        failed += r.pass() ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(reports.size()) - failed, reports.size());
    return failed == 0 ? 0 : 1;
}
