#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace susy::cli {

namespace {

nlohmann::ordered_json parameters_json(const ParameterVector& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& e : p) j[e.name] = e.value;
    return j;
}

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string details(const ReportRow& row) {
    std::ostringstream os;
    if (row.lambda_prime) {
        os << "lambda'=(";
        for (std::size_t i = 0; i < row.lambda_prime->size(); ++i) {
            const auto& nv = (*row.lambda_prime)[i];
            if (i) os << ", ";
            os << nv.name << '=' << format_complex(nv.value);
        }
        os << ") ";
    }
    if (row.delta_E) os << "dE=" << format_number(*row.delta_E) << ' ';
    if (row.alpha) os << "alpha=" << format_number(*row.alpha) << ' ';
    if (row.numerical) os << "numerical=" << format_number(*row.numerical) << ' ';
    if (row.analytic) os << "analytic=" << format_number(*row.analytic) << ' ';
    if (!row.note.empty()) os << "[" << row.note << "]";
    return os.str();
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    // Imaginary parts at roundoff level are printed as real numbers.
    if (std::abs(z.imag()) <= 1e-13 * std::max(1.0, std::abs(z.real()))) return format_number(z.real());
    std::string out = format_number(z.real());
    out += z.imag() < 0.0 ? "-" : "+";
    out += format_number(std::abs(z.imag()));
    out += "i";
    return out;
}

bool Report::pass() const {
    return std::all_of(results.begin(), results.end(), [](const ReportRow& r) { return r.pass; });
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["family"] = family;
    j["parameters"] = parameters_json(parameters);
    j["s_values"] = s_values;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& row : results) {
        nlohmann::ordered_json r;
        r["family"] = row.family;
        r["s"] = row.s;
        r["parameters"] = parameters_json(row.parameters);
        r["check"] = row.check;
        r["residual"] = row.residual;
        r["tolerance"] = row.tolerance;
        r["pass"] = row.pass;
        if (row.lambda_prime) {
            nlohmann::ordered_json lp = nlohmann::ordered_json::array();
            for (const auto& nv : *row.lambda_prime) {
                lp.push_back({{"name", nv.name}, {"re", nv.value.real()}, {"im", nv.value.imag()}});
            }
            r["lambda_prime"] = lp;
        } else {
            r["lambda_prime"] = nullptr;
        }
        r["delta_E"] = optional_json(row.delta_E);
        r["alpha"] = optional_json(row.alpha);
        r["numerical"] = optional_json(row.numerical);
        r["analytic"] = optional_json(row.analytic);
        r["note"] = row.note;
        j["results"].push_back(std::move(r));
    }
    j["pass"] = pass();
    j["wall_time_s"] = wall_time_s;
    return j;
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "family,s,parameters,check,residual,tolerance,pass\n";
    for (const auto& row : results) {
        std::string params;
        for (const auto& e : row.parameters) {
            if (!params.empty()) params += ';';
            params += e.name + '=' + format_number(e.value);
        }
        os << csv_escape(row.family) << ',' << row.s << ',' << csv_escape(params) << ',' << csv_escape(row.check)
           << ',' << row.residual << ',' << row.tolerance << ',' << (row.pass ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string Report::to_table() const {
    std::ostringstream os;
    os << "command: " << command << '\n';
    std::size_t family_width = 6;
    std::size_t check_width = 5;
    for (const auto& row : results) {
        family_width = std::max(family_width, row.family.size());
        check_width = std::max(check_width, row.check.size());
    }
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-*s  %-6s  %-*s  %-12s  %-9s  %-4s  %s\n", static_cast<int>(family_width),
                  "family", "s", static_cast<int>(check_width), "check", "residual", "tol", "pass", "details");
    os << buf;
    for (const auto& row : results) {
        std::snprintf(buf, sizeof buf, "%-*s  %-6s  %-*s  %-12.4e  %-9.1e  %-4s  ", static_cast<int>(family_width),
                      row.family.c_str(), format_number(row.s).c_str(), static_cast<int>(check_width),
                      row.check.c_str(), row.residual, row.tolerance, row.pass ? "ok" : "FAIL");
        os << buf << details(row) << '\n';
    }
    os << (pass() ? "PASS" : "FAIL") << " (" << results.size() << " rows, wall time " << format_number(wall_time_s)
       << " s)\n";
    return os.str();
}

}  // namespace susy::cli
