#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "susy/parameters.hpp"

namespace susy::cli {

struct NamedValue {
    std::string name;
    std::complex<double> value;
};

/// One checked quantity. Every row serializes with the same keys; fields that
/// do not apply are null.
struct ReportRow {
    std::string family;
    double s = 0.0;
    ParameterVector parameters;
    std::string check;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::optional<std::vector<NamedValue>> lambda_prime;
    std::optional<double> delta_E;
    std::optional<double> alpha;
    std::optional<double> numerical;
    std::optional<double> analytic;
    std::string note;
};

struct Report {
    std::string command;  // echo of the command line
    std::string family;
    ParameterVector parameters;
    std::vector<double> s_values;
    std::vector<ReportRow> results;
    double wall_time_s = 0.0;

    /// True iff every row passed.
    bool pass() const;

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
    std::string to_table() const;
};

std::string format_number(double v);
std::string format_complex(std::complex<double> z);

}  // namespace susy::cli
