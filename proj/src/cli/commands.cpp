#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "report.hpp"
#include "susy/cli.hpp"
#include "susy/continuum_interp.hpp"
#include "susy/discrete_families.hpp"
#include "susy/errors.hpp"
#include "susy/sampling.hpp"
#include "susy/spectral.hpp"

namespace susy::cli {

namespace {

// Default tolerances per check; SUSY_INTERP_TOL replaces all of them.
constexpr double kOperatorTol = 1e-9;
constexpr double kPrepotentialTol = 1e-11;
constexpr double kShapeTol = 1e-9;
constexpr double kDiscreteTol = 1e-9;
constexpr double kSpectrumTol = 1e-8;
constexpr double kBoundaryTol = 1e-10;

const std::vector<double> kDefaultSGrid{0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<std::string> kAllParameterFlags{"omega", "g", "h", "mu", "lambda", "a", "b", "c", "d"};

std::optional<double> tolerance_override() {
    const char* env = std::getenv("SUSY_INTERP_TOL");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
        throw ParameterError(std::string("SUSY_INTERP_TOL is not a positive number: ") + env);
    }
    return v;
}

double tol(double fallback) { return tolerance_override().value_or(fallback); }

struct FamilyRef {
    const ContinuumFamily* continuum = nullptr;
    const DiscreteFamily* discrete = nullptr;

    std::string slug() const { return continuum ? continuum->slug : discrete->slug; }
    std::vector<std::string> parameter_names() const {
        return continuum ? continuum->parameter_names() : discrete->parameter_names;
    }
};

FamilyRef resolve_family(const std::string& name) {
    if (const auto* c = find_continuum_family(name)) return {c, nullptr};
    if (const auto* d = find_discrete_family(name)) return {nullptr, d};
    throw ParameterError("unknown family '" + name + "' (see `list`)");
}

// Parameter flags shared by interp and eigensolve.
struct ParameterFlags {
    std::map<std::string, double> values;
    std::map<std::string, CLI::Option*> options;

    void attach(CLI::App* app) {
        for (const auto& name : kAllParameterFlags) {
            options[name] = app->add_option("--" + name, values[name], "coupling constant " + name);
        }
    }

    ParameterVector collect(const FamilyRef& family) const {
        const auto names = family.parameter_names();
        ParameterVector lambda;
        for (const auto& name : names) {
            if (options.at(name)->count() == 0) {
                throw ParameterError(family.slug() + " requires --" + name);
            }
            lambda.set(name, values.at(name));
        }
        for (const auto& [name, opt] : options) {
            if (opt->count() && std::find(names.begin(), names.end(), name) == names.end()) {
                throw ParameterError(family.slug() + " has no parameter --" + name);
            }
        }
        return lambda;
    }
};

std::vector<double> parse_s_grid(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end == item.c_str() || *end != '\0') {
            throw ParameterError("cannot parse s value '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw ParameterError("empty s grid");
    return out;
}

std::vector<double> resolve_s(const CLI::Option* s_opt, double s, const CLI::Option* grid_opt,
                              const std::string& grid) {
    std::vector<double> values;
    if (s_opt->count()) {
        values = {s};
    } else if (grid_opt->count()) {
        values = parse_s_grid(grid);
    } else {
        values = kDefaultSGrid;
    }
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            std::ostringstream msg;
            msg << "s=" << v << " is outside [0, 1]";
            throw DomainError(msg.str());
        }
    }
    return values;
}

ReportRow make_row(std::string family, double s, ParameterVector parameters, std::string check) {
    ReportRow row;
    row.family = std::move(family);
    row.s = s;
    row.parameters = std::move(parameters);
    row.check = std::move(check);
    return row;
}

std::vector<NamedValue> named(const ParameterVector& p) {
    std::vector<NamedValue> out;
    for (const auto& e : p) out.push_back({e.name, {e.value, 0.0}});
    return out;
}

std::vector<NamedValue> named_roots(const DiscreteFamily& family, const std::vector<cplx>& roots) {
    std::vector<NamedValue> out;
    for (std::size_t i = 0; i < roots.size(); ++i) out.push_back({family.parameter_names[i] + "'", roots[i]});
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string format_delta(double v) {
    if (v == 0.5) return "1/2";
    if (v == -0.5) return "-1/2";
    return format_number(v);
}

// ---------------------------------------------------------------------------
// Per-check row builders
// ---------------------------------------------------------------------------

ReportRow operator_row(const ContinuumFamily& f, const ParameterVector& lambda, double s) {
    const auto map = coupling_map(f, lambda, s);
    const auto rep = verify_operator_interpolation(f, lambda, s, default_grid(f));
    ReportRow row = make_row(f.slug, s, lambda, "operator-interpolation");
    row.residual = rep.relative_residual();
    row.tolerance = tol(kOperatorTol);
    row.pass = row.residual <= row.tolerance;
    row.lambda_prime = named(map.lambda_prime);
    row.delta_E = map.delta_E;
    row.alpha = map.alpha;
    row.note = join(map.warnings, "; ");
    return row;
}

ReportRow prepotential_row(const ContinuumFamily& f, const ParameterVector& lambda, double s) {
    const auto map = prepotential_coupling_map(f, lambda, s);
    const auto rep = verify_prepotential_interpolation(f, lambda, s, default_grid(f));
    ReportRow row = make_row(f.slug, s, lambda, "prepotential-interpolation");
    row.residual = rep.max_abs_residual;
    row.tolerance = tol(kPrepotentialTol);
    row.pass = row.residual <= row.tolerance;
    row.lambda_prime = named(map.lambda_prime);
    row.delta_E = map.delta_E;
    row.alpha = map.alpha;
    return row;
}

ReportRow shape_row(const ContinuumFamily& f, const ParameterVector& lambda) {
    const auto rep = verify_shape_invariance(f, lambda, default_grid(f));
    ReportRow row = make_row(f.slug, 1.0, lambda, "shape-invariance");
    row.residual = rep.relative_residual();
    row.tolerance = tol(kShapeTol);
    row.pass = row.residual <= row.tolerance;
    row.delta_E = energy_level(f, lambda, 1);
    return row;
}

ReportRow potential_row(const DiscreteFamily& f, const ParameterVector& lambda, double s, double q) {
    const auto shift = solve_shifted_parameters(f, lambda, s, q);
    const auto pts = default_sample_points(f);
    const auto rep = verify_potential_identity(f, lambda, s, pts, q);
    ReportRow row = make_row(f.slug, s, lambda, "potential-identity");
    row.residual = rep.relative_residual();
    row.tolerance = tol(kDiscreteTol);
    row.pass = row.residual <= row.tolerance;
    row.lambda_prime = named_roots(f, shift.lambda_prime);
    row.delta_E = shift.delta_E_tilde;
    row.alpha = shift.alpha;
    if (shift.boundary_matched) {
        row.note = *shift.boundary_matched ? "boundary solution matched" : "boundary solution NOT matched";
        if (!*shift.boundary_matched) row.pass = false;
    }
    return row;
}

ReportRow spectrum_row(const DiscreteFamily& f, const ParameterVector& lambda, double s, double q, int degree) {
    ReportRow row = make_row(f.slug, s, lambda, "interpolated-spectrum");
    row.tolerance = tol(kSpectrumTol);
    try {
        const auto check = verify_interpolated_spectrum(f, lambda, s, degree, q, row.tolerance);
        row.residual = std::max(check.diagonal.relative_residual(), check.triangular_defect);
        row.alpha = check.shift.alpha;
        row.delta_E = check.shift.delta_E_tilde;
    } catch (const DefectError& e) {
        row.residual = std::numeric_limits<double>::infinity();
        row.note = e.what();
    }
    row.pass = row.residual <= row.tolerance;
    return row;
}

ReportRow boundary_row(const DiscreteFamily& f, const ParameterVector& lambda, double s, double q) {
    const auto shift = solve_shifted_parameters(f, lambda, s, q);
    std::vector<cplx> expected;
    if (s == 0.0) {
        for (const auto& e : lambda) expected.emplace_back(e.value, 0.0);
    } else {
        expected = shifted_parameters(f, lambda, q);
    }
    ReportRow row = make_row(f.slug, s, lambda, "boundary-solution");
    row.residual = multiset_distance(shift.lambda_prime, expected);
    if (f.uses_q()) {
        const double alpha_expected = s == 0.0 ? 1.0 : 1.0 / q;
        row.residual = std::max(row.residual, std::abs(shift.alpha - alpha_expected));
    }
    row.tolerance = tol(kBoundaryTol);
    row.pass = row.residual <= row.tolerance;
    row.lambda_prime = named_roots(f, shift.lambda_prime);
    row.alpha = shift.alpha;
    return row;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

nlohmann::ordered_json describe(const ContinuumFamily& f) {
    nlohmann::ordered_json j;
    j["slug"] = f.slug;
    j["name"] = f.display_name;
    j["kind"] = "continuum";
    j["parameters"] = nlohmann::ordered_json::array();
    for (const auto& r : f.ranges) j["parameters"].push_back({{"name", r.name}, {"range", r.describe()}});
    if (!f.constraint_note.empty()) j["constraint"] = f.constraint_note;
    j["delta"] = f.delta;
    j["domain"] = {f.domain.lo, f.domain.hi};
    j["finite_spectrum"] = f.finite_spectrum;
    return j;
}

nlohmann::ordered_json describe(const DiscreteFamily& f) {
    nlohmann::ordered_json j;
    j["slug"] = f.slug;
    j["name"] = f.display_name;
    j["kind"] = "discrete";
    j["parameters"] = nlohmann::ordered_json::array();
    for (const auto& n : f.parameter_names) j["parameters"].push_back({{"name", n}, {"range", f.range_note}});
    if (f.uses_q()) {
        j["delta"] = "q^(1/2) scaling";
    } else {
        j["delta"] = f.delta;
    }
    j["eta"] = f.eta_kind == EtaKind::Linear ? "x" : f.eta_kind == EtaKind::Square ? "x^2" : "cos(theta)";
    j["finite_spectrum"] = false;
    return j;
}

std::string delta_text(const std::vector<double>& delta) {
    std::vector<std::string> parts;
    for (double v : delta) parts.push_back(format_delta(v));
    return "delta=(" + join(parts, ",") + ")";
}

int cmd_list(bool json, const std::string& only, std::ostream& out) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::ostringstream text;
    bool found = only.empty();
    char buf[512];
    for (const auto& f : continuum_catalog()) {
        if (!only.empty() && f.slug != only && find_continuum_family(only) != &f) continue;
        found = true;
        arr.push_back(describe(f));
        std::vector<std::string> ranges;
        for (const auto& r : f.ranges) ranges.push_back(r.describe());
        if (!f.constraint_note.empty()) ranges.push_back(f.constraint_note);
        std::snprintf(buf, sizeof buf, "%-26s %-10s %-24s %-48s %s\n", f.slug.c_str(), "continuum",
                      delta_text(f.delta).c_str(), join(ranges, ", ").c_str(),
                      f.finite_spectrum ? "finite spectrum" : "infinite spectrum");
        text << buf;
    }
    for (const auto& f : discrete_catalog()) {
        if (!only.empty() && f.slug != only && find_discrete_family(only) != &f) continue;
        found = true;
        arr.push_back(describe(f));
        const std::string d = f.uses_q() ? "delta=q^(1/2)*lambda" : delta_text(f.delta);
        std::snprintf(buf, sizeof buf, "%-26s %-10s %-24s %-48s %s\n", f.slug.c_str(), "discrete", d.c_str(),
                      f.range_note.c_str(), "infinite spectrum");
        text << buf;
    }
    if (!found) throw ParameterError("unknown family '" + only + "'");
    if (json) {
        out << (only.empty() ? arr.dump(2) : arr.at(0).dump(2)) << '\n';
    } else {
        out << text.str();
    }
    return kPass;
}

Report cmd_interp(const FamilyRef& family, const ParameterVector& lambda, const std::vector<double>& s_values,
                  double q, bool prepotential_mode) {
    Report report;
    report.family = family.slug();
    report.parameters = lambda;
    report.s_values = s_values;
    if (family.continuum) {
        family.continuum->validate(lambda);
        for (double s : s_values) {
            report.results.push_back(prepotential_mode ? prepotential_row(*family.continuum, lambda, s)
                                                       : operator_row(*family.continuum, lambda, s));
        }
    } else {
        family.discrete->validate(lambda, q);
        for (double s : s_values) report.results.push_back(potential_row(*family.discrete, lambda, s, q));
    }
    return report;
}

Report cmd_eigensolve(const ContinuumFamily& f, const ParameterVector& lambda, double s, int n, int k,
                      double tolerance, Interval window) {
    f.validate(lambda);
    const auto map = coupling_map(f, lambda, s);
    if (auto count = f.bound_state_count(map.lambda_prime); count && k > *count) {
        throw IndexError(f.slug + ": only " + std::to_string(*count) + " bound states at lambda'=" +
                         map.lambda_prime.to_string());
    }
    const Grid1D grid(window.lo, window.hi, n);
    const auto op = discretize([&](double x) { return interp_potential_U_s(f, lambda, s, x); }, grid);
    const auto eig = eigen_lowest(op, static_cast<std::size_t>(k));

    Report report;
    report.family = f.slug;
    report.parameters = lambda;
    report.s_values = {s};
    for (int level = 0; level < k; ++level) {
        const double analytic = energy_level(f, map.lambda_prime, level, Validation::Relaxed) + map.delta_E;
        ReportRow row = make_row(f.slug, s, lambda, "eigenvalue n=" + std::to_string(level));
        row.numerical = eig[level];
        row.analytic = analytic;
        row.residual = std::abs(eig[level] - analytic) / std::max(1.0, std::abs(analytic));
        row.tolerance = tolerance;
        row.pass = row.residual <= tolerance;
        row.lambda_prime = named(map.lambda_prime);
        row.delta_E = map.delta_E;
        report.results.push_back(std::move(row));
    }
    return report;
}

// Summarises many cases of one check into a single row holding the worst case.
struct Aggregate {
    std::optional<ReportRow> worst;
    std::optional<ReportRow> first_failure;
    std::size_t cases = 0;

    void add(ReportRow row, std::size_t draw) {
        ++cases;
        if (!row.pass && !first_failure) {
            first_failure = row;
            first_failure->note = "draw " + std::to_string(draw) + (row.note.empty() ? "" : ": " + row.note);
        }
        if (!worst || !(row.residual <= worst->residual)) worst = std::move(row);
    }

    ReportRow finish() const {
        ReportRow row = first_failure ? *first_failure : *worst;
        row.pass = !first_failure;
        if (!first_failure) row.note = std::to_string(cases) + " cases, worst shown";
        return row;
    }
};

std::uint64_t family_seed(std::uint64_t seed, std::size_t index) {
    return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index) + 1;
}

Report cmd_verify(const std::optional<FamilyRef>& only, const std::vector<double>& s_values, std::uint64_t seed,
                  int draws, double q, int degree, std::ostream& err) {
    Report report;
    report.family = only ? only->slug() : "all";
    report.s_values = s_values;

    std::size_t index = 0;
    for (const auto& f : continuum_catalog()) {
        const std::size_t family_index = index++;
        if (only && only->continuum != &f) continue;
        Rng rng(family_seed(seed, family_index));
        Aggregate op, pre, shape;
        for (int d = 0; d < draws; ++d) {
            const auto lambda = random_parameters(f, rng);
            shape.add(shape_row(f, lambda), d);
            for (double s : s_values) {
                op.add(operator_row(f, lambda, s), d);
                pre.add(prepotential_row(f, lambda, s), d);
            }
        }
        for (auto* a : {&op, &pre, &shape}) report.results.push_back(a->finish());
    }
    for (const auto& f : discrete_catalog()) {
        const std::size_t family_index = index++;
        if (only && only->discrete != &f) continue;
        Rng rng(family_seed(seed, family_index));
        Aggregate pot, spectra, boundary;
        for (int d = 0; d < draws; ++d) {
            const auto lambda = random_parameters(f, rng, q);
            for (double s : s_values) {
                pot.add(potential_row(f, lambda, s, q), d);
                spectra.add(spectrum_row(f, lambda, s, q, degree), d);
            }
            boundary.add(boundary_row(f, lambda, 0.0, q), d);
            boundary.add(boundary_row(f, lambda, 1.0, q), d);
        }
        for (auto* a : {&pot, &spectra, &boundary}) report.results.push_back(a->finish());
    }
    for (const auto& row : report.results) {
        if (!row.pass) {
            err << "first failure: family=" << row.family << " check=" << row.check << " s=" << row.s
                << " parameters=(" << row.parameters.to_string() << ") residual=" << row.residual << " ("
                << row.note << ")\n";
            break;
        }
    }
    return report;
}

void emit(const Report& report, bool json, bool csv, const std::string& out_path, std::ostream& out,
          std::ostream& err) {
    std::string text;
    if (json) {
        text = report.to_json().dump(2) + "\n";
    } else if (csv) {
        text = report.to_csv();
    } else {
        text = report.to_table();
    }
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw ParameterError("cannot open --out file " + out_path);
    file << text;
    err << "report written to " << out_path << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interpolation of SUSY-partner Hamiltonians for shape-invariant systems", "susy-interp"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    bool json = false;
    bool csv = false;
    std::string out_path;
    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "JSON output");
        sub->add_flag("--csv", csv, "CSV output");
        sub->add_option("--out", out_path, "write the report to this file");
    };

    auto* list = app.add_subcommand("list", "list the family catalog");
    std::string list_family;
    list->add_flag("--json", json, "JSON output");
    list->add_option("--family", list_family, "show one family");

    auto* interp = app.add_subcommand("interp", "interpolation map and identity residual");
    std::string interp_family;
    ParameterFlags interp_params;
    double interp_s = 0.0;
    std::string interp_grid;
    double interp_q = kDefaultQ;
    std::string interp_mode = "operator";
    interp->add_option("family", interp_family, "family slug")->required();
    interp_params.attach(interp);
    auto* interp_s_opt = interp->add_option("--s", interp_s, "single s value");
    auto* interp_grid_opt = interp->add_option("--s-grid", interp_grid, "comma-separated s values");
    interp->add_option("--q", interp_q, "Askey-Wilson q");
    interp->add_option("--mode", interp_mode, "continuum interpolation: operator|prepotential")
        ->check(CLI::IsMember({"operator", "prepotential"}));
    add_output_flags(interp);

    auto* eigensolve = app.add_subcommand("eigensolve", "finite-difference spectrum of H_s vs closed form");
    std::string eig_family;
    ParameterFlags eig_params;
    double eig_s = 0.0;
    int eig_n = 2000;
    int eig_k = 5;
    double eig_tol = 5e-3;
    double eig_lo = 0.0;
    double eig_hi = 0.0;
    eigensolve->add_option("family", eig_family, "continuum family slug")->required();
    eig_params.attach(eigensolve);
    eigensolve->add_option("--s", eig_s, "interpolation parameter");
    eigensolve->add_option("--n", eig_n, "interior grid points");
    eigensolve->add_option("-k", eig_k, "number of lowest levels");
    auto* tol_opt = eigensolve->add_option("--tol", eig_tol, "relative tolerance");
    auto* lo_opt = eigensolve->add_option("--lo", eig_lo, "left wall of the box");
    auto* hi_opt = eigensolve->add_option("--hi", eig_hi, "right wall of the box");
    add_output_flags(eigensolve);

    auto* verify = app.add_subcommand("verify", "randomized identity sweep");
    std::string verify_scope;
    double verify_s = 0.0;
    std::string verify_grid;
    std::uint64_t verify_seed = 42;
    int verify_draws = 20;
    double verify_q = kDefaultQ;
    int verify_degree = 10;
    verify->add_option("scope", verify_scope, "family slug or 'all'")->required();
    auto* verify_s_opt = verify->add_option("--s", verify_s, "single s value");
    auto* verify_grid_opt = verify->add_option("--s-grid", verify_grid, "comma-separated s values");
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--draws", verify_draws, "random parameter draws per family")->check(CLI::PositiveNumber);
    verify->add_option("--q", verify_q, "Askey-Wilson q");
    verify->add_option("--degree", verify_degree, "max degree of H~_s matrices")->check(CLI::Range(1, 12));
    add_output_flags(verify);

    std::vector<std::string> argv{"susy-interp"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargs;
    for (const auto& a : argv) cargs.push_back(a.c_str());

    std::string echo;
    for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](Report report) {
        report.command = echo;
        report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(report, json, csv, out_path, out, err);
        return report.pass() ? kPass : kIdentityFailure;
    };

    try {
        if (list->parsed()) return cmd_list(json, list_family, out);
        if (interp->parsed()) {
            const auto family = resolve_family(interp_family);
            const auto lambda = interp_params.collect(family);
            const auto s_values = resolve_s(interp_s_opt, interp_s, interp_grid_opt, interp_grid);
            return finish(cmd_interp(family, lambda, s_values, interp_q, interp_mode == "prepotential"));
        }
        if (eigensolve->parsed()) {
            const auto family = resolve_family(eig_family);
            if (!family.continuum) throw ParameterError("eigensolve supports continuum families only");
            const auto lambda = eig_params.collect(family);
            if (!(eig_s >= 0.0 && eig_s <= 1.0)) throw DomainError("s must lie in [0, 1]");
            Interval window = family.continuum->eigen_window;
            if (lo_opt->count()) window.lo = eig_lo;
            if (hi_opt->count()) window.hi = eig_hi;
            if (!tol_opt->count()) eig_tol = tol(eig_tol);
            return finish(cmd_eigensolve(*family.continuum, lambda, eig_s, eig_n, eig_k, eig_tol, window));
        }
        if (verify->parsed()) {
            std::optional<FamilyRef> only;
            if (verify_scope != "all") only = resolve_family(verify_scope);
            const auto s_values = resolve_s(verify_s_opt, verify_s, verify_grid_opt, verify_grid);
            if (!(verify_q > 0.0 && verify_q < 1.0)) throw ParameterError("q must lie in (0, 1)");
            return finish(cmd_verify(only, s_values, verify_seed, verify_draws, verify_q, verify_degree, err));
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const BranchError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DefectError& e) {
        err << "identity failure: " << e.what() << '\n';
        return kIdentityFailure;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kInputError;
}

}  // namespace susy::cli
