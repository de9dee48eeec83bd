#pragma once

#include <barning/codec.hpp>
#include <barning/measure.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace barning::verify {

enum class Scale { Quick, Full };

Scale parse_scale(std::string_view text);
std::string to_string(Scale scale);

// One measured quantity against its reference value.
struct CheckResult {
    std::string quantity;
    nlohmann::json parameters = nlohmann::json::object();
    double value = 0.0;
    double reference_value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

void to_json(nlohmann::json &out, const CheckResult &check);
void from_json(const nlohmann::json &in, CheckResult &check);

// Single-entry corruption of a generating matrix: entries[row][col] += delta
// in M_matrix (matrix 1..3, row and col 0..2).
struct MatrixCorruption {
    int matrix = 1;
    int row = 0;
    int col = 0;
    long delta = 1;
};

// "M2:0:1:+1"
MatrixCorruption parse_corruption(std::string_view text);
std::string to_string(const MatrixCorruption &c);

struct Mutation {
    std::optional<MatrixCorruption> matrix;
    bool jacobian = false; // replaces 1/(1+2t)^2 by 1/(1+t)^2 in the invariance equation

    bool active() const { return matrix.has_value() || jacobian; }
};

MatrixSet mutated_matrices(const Mutation &m);
InvarianceEquation mutated_equation(const Mutation &m);

struct Options {
    Scale scale = Scale::Full;
    std::uint64_t seed = 20240601;
    unsigned threads = 1;
    Mutation mutation;
};

struct CriterionReport {
    int id = 0;
    std::string title;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool pass() const;
};

void to_json(nlohmann::json &out, const CriterionReport &report);

inline constexpr int criterion_count = 11;

std::string criterion_title(int id);
CriterionReport run_criterion(int id, const Options &options);
std::vector<CriterionReport> run_all(const Options &options);

nlohmann::json report_json(const std::vector<CriterionReport> &reports, const Options &options);

} // namespace barning::verify
