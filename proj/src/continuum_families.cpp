#include "susy/continuum_families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "susy/errors.hpp"
#include "susy/spectral.hpp"

namespace susy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

ParameterRange positive(std::string name) { return {std::move(name), 0.0, 1e300, false, false}; }
ParameterRange at_least_half(std::string name) { return {std::move(name), 0.5, 1e300, true, false}; }
ParameterRange any_real(std::string name) { return {std::move(name), -1e300, 1e300, false, false}; }

Interval trimmed(Interval domain) {
    const double margin = 1e-2 * domain.length();
    return {domain.lo + margin, domain.hi - margin};
}

std::vector<ContinuumFamily> build_catalog() {
    const Interval real_line{-kInf, kInf};
    const Interval half_line{0.0, kInf};
    const Interval sin_box{0.0, kPi};
    const Interval pt_box{0.0, kPi / 2};
    const Interval real_window{-10.0, 10.0};
    const Interval half_window{0.05, 15.0};

    std::vector<ContinuumFamily> c;
    c.push_back({ContinuumId::HarmonicOscillator, "harmonic-oscillator", "harmonic oscillator",
                 {positive("omega")}, {0.0}, real_line, false, real_window, {-10.0, 10.0}, ""});
    c.push_back({ContinuumId::RadialOscillator, "radial-oscillator",
                 "harmonic oscillator with centrifugal barrier", {positive("omega"), at_least_half("g")},
                 {0.0, 1.0}, half_line, false, half_window, {0.0, 15.0}, ""});
    c.push_back({ContinuumId::SymmetricPoschlTeller, "symmetric-poschl-teller",
                 "symmetric Poschl-Teller (1/sin^2 x)", {at_least_half("g")}, {1.0}, sin_box, false,
                 trimmed(sin_box), sin_box, ""});
    c.push_back({ContinuumId::Soliton, "soliton", "soliton (symmetric Rosen-Morse)", {positive("g")}, {-1.0},
                 real_line, true, real_window, {-25.0, 25.0}, ""});
    // The e^{2x} wall makes W ~ mu e^x large on the right; a shorter window keeps
    // absolute prepotential residuals at rounding level.
    c.push_back({ContinuumId::Morse, "morse", "Morse", {positive("g"), positive("mu")}, {-1.0, 0.0}, real_line,
                 true, {-10.0, 4.0}, {-40.0, 6.0}, ""});
    c.push_back({ContinuumId::HyperbolicSymmetricTop, "hyperbolic-symmetric-top", "hyperbolic symmetric top",
                 {positive("g"), positive("mu")}, {-1.0, 0.0}, real_line, true, real_window, {-30.0, 30.0}, ""});
    c.push_back({ContinuumId::PoschlTeller, "poschl-teller", "Poschl-Teller", {at_least_half("g"), at_least_half("h")},
                 {1.0, 1.0}, pt_box, false, trimmed(pt_box), pt_box, ""});
    c.push_back({ContinuumId::RosenMorse, "rosen-morse", "Rosen-Morse", {positive("g"), any_real("mu")},
                 {-1.0, 0.0}, real_line, true, real_window, {-30.0, 30.0}, "-g^2 < mu < g^2"});
    c.push_back({ContinuumId::Coulomb, "coulomb", "Coulomb with centrifugal barrier",
                 {at_least_half("g"), positive("mu")}, {1.0, 0.0}, half_line, false, half_window, {0.0, 80.0}, ""});
    return c;
}

const std::vector<ContinuumFamily>& catalog() {
    static const std::vector<ContinuumFamily> instance = build_catalog();
    return instance;
}

struct Alias {
    std::string_view alias;
    ContinuumId id;
};

constexpr Alias kAliases[] = {
    {"ho", ContinuumId::HarmonicOscillator},     {"ro", ContinuumId::RadialOscillator},
    {"spt", ContinuumId::SymmetricPoschlTeller}, {"hst", ContinuumId::HyperbolicSymmetricTop},
    {"pt", ContinuumId::PoschlTeller},           {"rm", ContinuumId::RosenMorse},
};

// log cosh x without overflow for large |x|.
double log_cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double sech(double x) { return 1.0 / std::cosh(x); }

void check_s(double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        std::ostringstream msg;
        msg << "interpolation parameter s=" << s << " is outside [0, 1]";
        throw DomainError(msg.str());
    }
}

void check_names(const ContinuumFamily& family, const ParameterVector& lambda) {
    if (lambda.size() != family.ranges.size()) {
        throw ParameterError(family.slug + " expects " + std::to_string(family.ranges.size()) + " parameters");
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const auto& entry = lambda.entries()[i];
        if (entry.name != family.ranges[i].name) {
            throw ParameterError(family.slug + ": expected parameter '" + family.ranges[i].name + "', got '" +
                                 entry.name + "'");
        }
        if (!std::isfinite(entry.value)) {
            throw ParameterError(family.slug + ": parameter '" + entry.name + "' is not finite");
        }
    }
}

void check_parameters(const ContinuumFamily& family, const ParameterVector& lambda, Validation mode) {
    if (mode == Validation::Strict) {
        family.validate(lambda);
        return;
    }
    check_names(family, lambda);
    if ((family.id == ContinuumId::RosenMorse || family.id == ContinuumId::Coulomb) && lambda["g"] == 0.0) {
        throw ParameterError(family.slug + ": g must be nonzero");
    }
}

void check_point(const ContinuumFamily& family, double x) {
    if (!family.domain.contains_open(x)) {
        std::ostringstream msg;
        msg << family.slug << ": x=" << x << " is outside the open domain (" << family.domain.lo << ", "
            << family.domain.hi << ")";
        throw DomainError(msg.str());
    }
}

// Greatest integer strictly below v.
int floor_strict(double v) { return static_cast<int>(std::ceil(v)) - 1; }

double closure_defect(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

void note_validity(const ContinuumFamily& family, InterpolationResult& result) {
    if (auto violation = family.range_violation(result.lambda_prime)) {
        result.warnings.push_back("lambda' leaves the physical range: " + *violation);
    }
}

}  // namespace

std::string ParameterRange::describe() const {
    std::ostringstream os;
    const bool has_lo = lo > -1e299;
    const bool has_hi = hi < 1e299;
    if (has_lo && has_hi) {
        os << lo << (lo_inclusive ? " <= " : " < ") << name << (hi_inclusive ? " <= " : " < ") << hi;
    } else if (has_lo) {
        os << name << (lo_inclusive ? " >= " : " > ") << lo;
    } else if (has_hi) {
        os << name << (hi_inclusive ? " <= " : " < ") << hi;
    } else {
        os << name << " real";
    }
    return os.str();
}

std::vector<std::string> ContinuumFamily::parameter_names() const {
    std::vector<std::string> out;
    for (const auto& r : ranges) out.push_back(r.name);
    return out;
}

std::optional<std::string> ContinuumFamily::range_violation(const ParameterVector& lambda) const {
    check_names(*this, lambda);
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        const double v = lambda.at(i);
        if (!ranges[i].admits(v)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << ranges[i].name << '=' << v << " violates " << ranges[i].describe();
            return msg.str();
        }
    }
    if (id == ContinuumId::RosenMorse) {
        const double g = lambda["g"];
        const double mu = lambda["mu"];
        if (!(std::abs(mu) < g * g)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "mu=" << mu << " violates -g^2 < mu < g^2 with g=" << g;
            return msg.str();
        }
    }
    return std::nullopt;
}

void ContinuumFamily::validate(const ParameterVector& lambda) const {
    if (auto violation = range_violation(lambda)) throw ParameterError(slug + ": " + *violation);
}

bool ContinuumFamily::is_valid(const ParameterVector& lambda) const {
    try {
        return !range_violation(lambda).has_value();
    } catch (const ParameterError&) {
        return false;
    }
}

std::optional<int> ContinuumFamily::bound_state_count(const ParameterVector& lambda) const {
    switch (id) {
        case ContinuumId::Soliton:
        case ContinuumId::Morse:
        case ContinuumId::HyperbolicSymmetricTop:
            return 1 + floor_strict(lambda["g"]);
        case ContinuumId::RosenMorse:
            return 1 + floor_strict(lambda["g"] - std::sqrt(std::abs(lambda["mu"])));
        default:
            return std::nullopt;
    }
}

std::span<const ContinuumFamily> continuum_catalog() { return catalog(); }

const ContinuumFamily& continuum_family(ContinuumId id) {
    for (const auto& f : catalog()) {
        if (f.id == id) return f;
    }
    throw ParameterError("unknown continuum family id");
}

const ContinuumFamily* find_continuum_family(std::string_view name) {
    for (const auto& f : catalog()) {
        if (f.slug == name) return &f;
    }
    for (const auto& a : kAliases) {
        if (a.alias == name) return &continuum_family(a.id);
    }
    return nullptr;
}

double prepotential(const ContinuumFamily& family, const ParameterVector& lambda, double x, Validation mode) {
    check_parameters(family, lambda, mode);
    check_point(family, x);
    switch (family.id) {
        case ContinuumId::HarmonicOscillator:
            return -lambda["omega"] * x * x / 2.0;
        case ContinuumId::RadialOscillator:
            return -lambda["omega"] * x * x / 2.0 + lambda["g"] * std::log(x);
        case ContinuumId::SymmetricPoschlTeller:
            return lambda["g"] * std::log(std::sin(x));
        case ContinuumId::Soliton:
            return -lambda["g"] * log_cosh(x);
        case ContinuumId::Morse:
            return lambda["g"] * x - lambda["mu"] * std::exp(x);
        case ContinuumId::HyperbolicSymmetricTop:
            return -lambda["g"] * log_cosh(x) - lambda["mu"] * std::atan(std::sinh(x));
        case ContinuumId::PoschlTeller:
            return lambda["g"] * std::log(std::sin(x)) + lambda["h"] * std::log(std::cos(x));
        case ContinuumId::RosenMorse: {
            const double g = lambda["g"];
            return -lambda["mu"] / g * x - g * log_cosh(x);
        }
        case ContinuumId::Coulomb: {
            const double g = lambda["g"];
            return -lambda["mu"] / g * x + g * std::log(x);
        }
    }
    throw ParameterError("unknown continuum family");
}

PrepotentialDerivatives prepotential_derivatives(const ContinuumFamily& family, const ParameterVector& lambda,
                                                 double x, Validation mode) {
    check_parameters(family, lambda, mode);
    check_point(family, x);
    switch (family.id) {
        case ContinuumId::HarmonicOscillator: {
            const double w = lambda["omega"];
            return {-w * x, -w};
        }
        case ContinuumId::RadialOscillator: {
            const double w = lambda["omega"];
            const double g = lambda["g"];
            return {-w * x + g / x, -w - g / (x * x)};
        }
        case ContinuumId::SymmetricPoschlTeller: {
            const double g = lambda["g"];
            const double sn = std::sin(x);
            return {g * std::cos(x) / sn, -g / (sn * sn)};
        }
        case ContinuumId::Soliton: {
            const double g = lambda["g"];
            const double sc = sech(x);
            return {-g * std::tanh(x), -g * sc * sc};
        }
        case ContinuumId::Morse: {
            const double e = lambda["mu"] * std::exp(x);
            return {lambda["g"] - e, -e};
        }
        case ContinuumId::HyperbolicSymmetricTop: {
            const double g = lambda["g"];
            const double mu = lambda["mu"];
            const double sc = sech(x);
            const double t = std::tanh(x);
            // sinh x / cosh^2 x = tanh x sech x
            return {-g * t - mu * sc, -g * sc * sc + mu * t * sc};
        }
        case ContinuumId::PoschlTeller: {
            const double g = lambda["g"];
            const double h = lambda["h"];
            const double sn = std::sin(x);
            const double cs = std::cos(x);
            return {g * cs / sn - h * sn / cs, -g / (sn * sn) - h / (cs * cs)};
        }
        case ContinuumId::RosenMorse: {
            const double g = lambda["g"];
            const double sc = sech(x);
            return {-lambda["mu"] / g - g * std::tanh(x), -g * sc * sc};
        }
        case ContinuumId::Coulomb: {
            const double g = lambda["g"];
            return {-lambda["mu"] / g + g / x, -g / (x * x)};
        }
    }
    throw ParameterError("unknown continuum family");
}

double potential_U(const ContinuumFamily& family, const ParameterVector& lambda, double x, Validation mode) {
    const auto d = prepotential_derivatives(family, lambda, x, mode);
    return d.first * d.first + d.second;
}

double energy_level(const ContinuumFamily& family, const ParameterVector& lambda, int n, Validation mode) {
    check_parameters(family, lambda, mode);
    if (n < 0) throw IndexError("level index must be non-negative");
    const double k = n;
    switch (family.id) {
        case ContinuumId::HarmonicOscillator:
            return 2.0 * k * lambda["omega"];
        case ContinuumId::RadialOscillator:
            return 4.0 * k * lambda["omega"];
        case ContinuumId::SymmetricPoschlTeller:
            return k * (k + 2.0 * lambda["g"]);
        case ContinuumId::Soliton:
        case ContinuumId::Morse:
        case ContinuumId::HyperbolicSymmetricTop:
            return k * (2.0 * lambda["g"] - k);
        case ContinuumId::PoschlTeller:
            return 4.0 * k * (k + lambda["g"] + lambda["h"]);
        case ContinuumId::RosenMorse: {
            if (n == 0) return 0.0;
            const double g = lambda["g"];
            const double mu = lambda["mu"];
            const double gn = g - k;
            if (gn == 0.0) throw IndexError("Rosen-Morse level with g - n = 0 is undefined");
            return mu * mu / (g * g) + g * g - (mu * mu / (gn * gn) + gn * gn);
        }
        case ContinuumId::Coulomb: {
            const double g = lambda["g"];
            const double mu = lambda["mu"];
            return mu * mu / (g * g) - mu * mu / ((g + k) * (g + k));
        }
    }
    throw ParameterError("unknown continuum family");
}

double spectrum(const ContinuumFamily& family, const ParameterVector& lambda, int n) {
    family.validate(lambda);
    if (n < 0) throw IndexError("level index must be non-negative");
    if (auto count = family.bound_state_count(lambda); count && n >= *count) {
        throw IndexError(family.slug + " has " + std::to_string(*count) + " bound states for " +
                         lambda.to_string() + "; level " + std::to_string(n) + " does not exist");
    }
    return energy_level(family, lambda, n);
}

double raised_coupling(double g, double s) {
    // 1 + 4g(g+2s-1) written as (2g-1)^2 + 8gs so that s = 0 returns g exactly.
    const double a = 2.0 * g - 1.0;
    const double disc = a * a + 8.0 * g * s;
    if (disc < 0.0) {
        std::ostringstream msg;
        msg << "negative discriminant 1+4g(g+2s-1)=" << disc << " for g=" << g << ", s=" << s;
        throw BranchError(msg.str());
    }
    return (1.0 + std::sqrt(disc)) / 2.0;
}

double lowered_coupling(double g, double s) {
    const double a = 2.0 * g + 1.0;
    const double disc = a * a - 8.0 * g * s;
    if (disc < 0.0) {
        std::ostringstream msg;
        msg << "negative discriminant 1+4g(g+1-2s)=" << disc << " for g=" << g << ", s=" << s;
        throw BranchError(msg.str());
    }
    return (-1.0 + std::sqrt(disc)) / 2.0;
}

namespace {

// Equality is admitted: it yields the boundary value g'' = 0 (e.g. g = 1, s = 1).
void require_lowering_branch(const ContinuumFamily& family, double g, double s) {
    if (!(g >= 2.0 * s - 1.0)) {
        std::ostringstream msg;
        msg << family.slug << ": coupling map needs g >= 2s-1 (g=" << g << ", s=" << s << ")";
        throw BranchError(msg.str());
    }
}

}  // namespace

InterpolationResult coupling_map(const ContinuumFamily& family, const ParameterVector& lambda, double s) {
    family.validate(lambda);
    check_s(s);

    InterpolationResult r;
    r.lambda_prime = lambda;
    switch (family.id) {
        case ContinuumId::HarmonicOscillator:
            r.delta_E = 2.0 * s * lambda["omega"];
            r.branch_note = "exact: H_s = H + 2 s omega";
            break;
        case ContinuumId::RadialOscillator: {
            const double g = lambda["g"];
            const double gp = raised_coupling(g, s);
            r.lambda_prime.set("g", gp);
            r.delta_E = 2.0 * lambda["omega"] * (s + gp - g);
            r.residual = closure_defect(gp * (gp - 1.0), g * (g + 2.0 * s - 1.0));
            r.branch_note = "g' = (1 + sqrt(1 + 4g(g+2s-1)))/2";
            break;
        }
        case ContinuumId::SymmetricPoschlTeller: {
            const double g = lambda["g"];
            const double gp = raised_coupling(g, s);
            r.lambda_prime.set("g", gp);
            r.delta_E = gp * gp - g * g;
            r.residual = closure_defect(gp * (gp - 1.0), g * (g + 2.0 * s - 1.0));
            r.branch_note = "g' = (1 + sqrt(1 + 4g(g+2s-1)))/2";
            break;
        }
        case ContinuumId::Soliton: {
            const double g = lambda["g"];
            require_lowering_branch(family, g, s);
            const double gpp = lowered_coupling(g, s);
            r.lambda_prime.set("g", gpp);
            r.delta_E = g * g - gpp * gpp;
            r.residual = closure_defect(gpp * (gpp + 1.0), g * (g + 1.0 - 2.0 * s));
            r.branch_note = "g'' = (-1 + sqrt(1 + 4g(g+1-2s)))/2";
            break;
        }
        case ContinuumId::Morse: {
            const double g = lambda["g"];
            if (!(g >= s)) {
                std::ostringstream msg;
                msg << "morse: coupling map needs g >= s (g=" << g << ", s=" << s << ")";
                throw BranchError(msg.str());
            }
            const double gp = g - s;
            r.lambda_prime.set("g", gp);
            r.delta_E = g * g - gp * gp;
            r.branch_note = "g' = g - s";
            break;
        }
        case ContinuumId::HyperbolicSymmetricTop: {
            const double g = lambda["g"];
            const double mu = lambda["mu"];
            // mu'^2 - g'(g'+1) = mu^2 - g(g-2s+1),  mu'(2g'+1) = mu(2g-2s+1)
            const double rhs1 = mu * mu - g * (g - 2.0 * s + 1.0);
            const double rhs2 = mu * (2.0 * g - 2.0 * s + 1.0);
            const auto f = [&](double gp, double mp) -> std::array<double, 2> {
                return {mp * mp - gp * (gp + 1.0) - rhs1, mp * (2.0 * gp + 1.0) - rhs2};
            };
            const auto jac = [](double gp, double mp) -> std::array<std::array<double, 2>, 2> {
                return {{{-(2.0 * gp + 1.0), 2.0 * mp}, {2.0 * mp, 2.0 * gp + 1.0}}};
            };
            const auto sol = newton_2d(f, jac, {g - s, mu});
            const double gp = sol.point[0];
            r.lambda_prime.set("g", gp);
            r.lambda_prime.set("mu", sol.point[1]);
            r.delta_E = g * g - gp * gp;
            r.residual = sol.residual;
            std::ostringstream note;
            note << "Newton from (g-s, mu), " << sol.iterations << " iterations; branch 2g'+1 "
                 << (2.0 * gp + 1.0 > 0.0 ? "> 0" : "<= 0");
            r.branch_note = note.str();
            break;
        }
        case ContinuumId::PoschlTeller: {
            const double g = lambda["g"];
            const double h = lambda["h"];
            const double gp = raised_coupling(g, s);
            const double hp = raised_coupling(h, s);
            r.lambda_prime.set("g", gp);
            r.lambda_prime.set("h", hp);
            r.delta_E = (gp + hp) * (gp + hp) - (g + h) * (g + h);
            r.residual = std::max(closure_defect(gp * (gp - 1.0), g * (g + 2.0 * s - 1.0)),
                                  closure_defect(hp * (hp - 1.0), h * (h + 2.0 * s - 1.0)));
            r.branch_note = "g', h' = (1 + sqrt(1 + 4x(x+2s-1)))/2";
            break;
        }
        case ContinuumId::RosenMorse: {
            const double g = lambda["g"];
            const double mu = lambda["mu"];
            require_lowering_branch(family, g, s);
            const double gpp = lowered_coupling(g, s);
            r.lambda_prime.set("g", gpp);
            r.delta_E = mu * mu / (g * g) + g * g - (mu * mu / (gpp * gpp) + gpp * gpp);
            r.residual = closure_defect(gpp * (gpp + 1.0), g * (g + 1.0 - 2.0 * s));
            r.branch_note = "g'' = (-1 + sqrt(1 + 4g(g+1-2s)))/2, mu unchanged";
            break;
        }
        case ContinuumId::Coulomb: {
            const double g = lambda["g"];
            const double mu = lambda["mu"];
            const double gp = raised_coupling(g, s);
            r.lambda_prime.set("g", gp);
            r.delta_E = mu * mu / (g * g) - mu * mu / (gp * gp);
            r.residual = closure_defect(gp * (gp - 1.0), g * (g + 2.0 * s - 1.0));
            r.branch_note = "g' = (1 + sqrt(1 + 4g(g+2s-1)))/2, mu unchanged";
            break;
        }
    }
    note_validity(family, r);
    return r;
}

InterpolationResult prepotential_coupling_map(const ContinuumFamily& family, const ParameterVector& lambda,
                                              double s) {
    family.validate(lambda);
    check_s(s);
    // W(x; lambda+delta) must be a meaningful formula; it need not be physical.
    check_parameters(family, family.shifted(lambda), Validation::Relaxed);

    InterpolationResult r;
    r.lambda_prime = lambda;
    switch (family.id) {
        case ContinuumId::HarmonicOscillator:
            break;
        case ContinuumId::RadialOscillator:
        case ContinuumId::SymmetricPoschlTeller:
            r.lambda_prime.set("g", lambda["g"] + s);
            break;
        case ContinuumId::Soliton:
        case ContinuumId::Morse:
        case ContinuumId::HyperbolicSymmetricTop:
            r.lambda_prime.set("g", lambda["g"] - s);
            break;
        case ContinuumId::PoschlTeller:
            r.lambda_prime.set("g", lambda["g"] + s);
            r.lambda_prime.set("h", lambda["h"] + s);
            break;
        case ContinuumId::RosenMorse: {
            const double g = lambda["g"];
            r.lambda_prime.set("g", g - s);
            r.lambda_prime.set("mu", (g - s) * (g - 1.0 + s) / (g * (g - 1.0)) * lambda["mu"]);
            break;
        }
        case ContinuumId::Coulomb: {
            const double g = lambda["g"];
            r.lambda_prime.set("g", g + s);
            r.lambda_prime.set("mu", (g + s) * (g + 1.0 - s) / (g * (g + 1.0)) * lambda["mu"]);
            break;
        }
    }
    if (auto violation = family.range_violation(r.lambda_prime)) {
        throw ParameterError(family.slug + ": interpolated lambda' is not valid: " + *violation);
    }
    r.delta_E = s * energy_level(family, lambda, 1);
    r.branch_note = "W_s = (1-s) W(lambda) + s W(lambda+delta) = W(lambda')";
    return r;
}

}  // namespace susy
