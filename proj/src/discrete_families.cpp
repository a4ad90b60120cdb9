#include "susy/discrete_families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "susy/errors.hpp"

namespace susy {

namespace {

constexpr cplx kI{0.0, 1.0};

std::vector<DiscreteFamily> build_catalog() {
    const std::vector<double> half2(2, 0.5);
    return {
        {DiscreteId::MeixnerPollaczek, "meixner-pollaczek", "Meixner-Pollaczek", {"lambda"}, ShiftKind::Additive,
         EtaKind::Linear, {0.5}, "lambda > 0"},
        {DiscreteId::ContinuousHahn, "continuous-hahn", "continuous Hahn", {"a", "b"}, ShiftKind::Additive,
         EtaKind::Linear, {0.5, 0.5}, "a, b > 0"},
        {DiscreteId::ContinuousDualHahn, "continuous-dual-hahn", "continuous dual Hahn", {"a", "b", "c"},
         ShiftKind::Additive, EtaKind::Square, {0.5, 0.5, 0.5}, "a, b, c > 0"},
        {DiscreteId::Wilson, "wilson", "Wilson", {"a", "b", "c", "d"}, ShiftKind::Additive, EtaKind::Square,
         {0.5, 0.5, 0.5, 0.5}, "a, b, c, d > 0"},
        {DiscreteId::AskeyWilson, "askey-wilson", "Askey-Wilson", {"a", "b", "c", "d"}, ShiftKind::Multiplicative,
         EtaKind::Cosine, {}, "-1 < a, b, c, d < 1, abcd < q, 0 < q < 1"},
    };
}

const std::vector<DiscreteFamily>& catalog() {
    static const std::vector<DiscreteFamily> instance = build_catalog();
    return instance;
}

std::vector<cplx> as_complex(const ParameterVector& lambda) {
    std::vector<cplx> out;
    for (const auto& p : lambda) out.emplace_back(p.value, 0.0);
    return out;
}

void check_s(double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        std::ostringstream msg;
        msg << "interpolation parameter s=" << s << " is outside [0, 1]";
        throw DomainError(msg.str());
    }
}

// Orders roots by descending real part, then descending imaginary part.
void canonical_sort(std::vector<cplx>& v) {
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
}

// eta^k, eta evaluated on a complex point.
cplx eta_of(EtaKind kind, cplx p) {
    switch (kind) {
        case EtaKind::Linear:
            return p;
        case EtaKind::Square:
            return p * p;
        case EtaKind::Cosine:
            return 0.5 * (p + 1.0 / p);
    }
    return p;
}

// A point whose eta value is the given eta.
cplx point_for_eta(EtaKind kind, cplx eta) {
    switch (kind) {
        case EtaKind::Linear:
            return eta;
        case EtaKind::Square:
            return std::sqrt(eta);
        case EtaKind::Cosine: {
            cplx z = eta + std::sqrt(eta * eta - 1.0);
            if (std::abs(z) < 1.0) z = 1.0 / z;
            return z;
        }
    }
    return eta;
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

void DiscreteFamily::validate(const ParameterVector& lambda, double q) const {
    if (lambda.size() != parameter_names.size()) {
        throw ParameterError(slug + " expects " + std::to_string(parameter_names.size()) + " parameters");
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const auto& e = lambda.entries()[i];
        if (e.name != parameter_names[i]) {
            throw ParameterError(slug + ": expected parameter '" + parameter_names[i] + "', got '" + e.name + "'");
        }
        if (!std::isfinite(e.value)) throw ParameterError(slug + ": parameter '" + e.name + "' is not finite");
    }
    std::ostringstream msg;
    msg.precision(17);
    if (shift_kind == ShiftKind::Additive) {
        for (const auto& e : lambda) {
            if (!(e.value > 0.0)) {
                msg << slug << ": " << e.name << '=' << e.value << " must be positive";
                throw ParameterError(msg.str());
            }
        }
        return;
    }
    if (!(q > 0.0 && q < 1.0)) {
        msg << slug << ": q=" << q << " must lie in (0, 1)";
        throw ParameterError(msg.str());
    }
    double product = 1.0;
    for (const auto& e : lambda) {
        if (!(e.value > -1.0 && e.value < 1.0)) {
            msg << slug << ": " << e.name << '=' << e.value << " must lie in (-1, 1)";
            throw ParameterError(msg.str());
        }
        product *= e.value;
    }
    if (!(product < q)) {
        msg << slug << ": abcd=" << product << " must be below q=" << q;
        throw ParameterError(msg.str());
    }
}

bool DiscreteFamily::is_valid(const ParameterVector& lambda, double q) const {
    try {
        validate(lambda, q);
        return true;
    } catch (const ParameterError&) {
        return false;
    }
}

double DiscreteFamily::eta(cplx point) const { return eta_of(eta_kind, point).real(); }

std::span<const DiscreteFamily> discrete_catalog() { return catalog(); }

const DiscreteFamily& discrete_family(DiscreteId id) {
    for (const auto& f : catalog()) {
        if (f.id == id) return f;
    }
    throw ParameterError("unknown discrete family id");
}

const DiscreteFamily* find_discrete_family(std::string_view name) {
    for (const auto& f : catalog()) {
        if (f.slug == name) return &f;
    }
    struct Alias {
        std::string_view alias;
        DiscreteId id;
    };
    static constexpr Alias aliases[] = {{"mp", DiscreteId::MeixnerPollaczek},
                                        {"chahn", DiscreteId::ContinuousHahn},
                                        {"cdhahn", DiscreteId::ContinuousDualHahn},
                                        {"aw", DiscreteId::AskeyWilson}};
    for (const auto& a : aliases) {
        if (a.alias == name) return &discrete_family(a.id);
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Potential functions
// ---------------------------------------------------------------------------

ComplexRationalFunction::ComplexRationalFunction(ComplexPolynomial numerator, ComplexPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (den_.degree() >= 1) poles_ = polynomial_roots(den_);
}

cplx ComplexRationalFunction::operator()(cplx z) const {
    for (const cplx& p : poles_) {
        if (std::abs(z - p) < 1e-8) {
            std::ostringstream msg;
            msg << "evaluation point " << z << " is within 1e-8 of the pole " << p;
            throw PoleError(msg.str());
        }
    }
    return num_(z) / den_(z);
}

ComplexRationalFunction potential_function(const DiscreteFamily& family, std::span<const cplx> params, double q) {
    if (params.size() != family.parameter_count()) {
        throw ParameterError(family.slug + ": wrong number of parameters");
    }
    ComplexPolynomial num{cplx{1.0}};
    if (family.id == DiscreteId::AskeyWilson) {
        for (const cplx& a : params) num = num * ComplexPolynomial{cplx{1.0}, -a};
        // (1 - z^2)(1 - q z^2)
        return {num, ComplexPolynomial{1.0, 0.0, -(1.0 + q), 0.0, q}};
    }
    for (const cplx& a : params) num = num * ComplexPolynomial{a, kI};
    switch (family.id) {
        case DiscreteId::ContinuousDualHahn:
        case DiscreteId::Wilson:
            // 2ix(2ix + 1) = 2i x - 4 x^2
            return {num, ComplexPolynomial{0.0, 2.0 * kI, -4.0}};
        default:
            return {num, ComplexPolynomial{1.0}};
    }
}

ComplexRationalFunction conjugate_potential_function(const DiscreteFamily& family, std::span<const cplx> params,
                                                     double q) {
    if (family.id == DiscreteId::AskeyWilson) {
        if (params.size() != family.parameter_count()) {
            throw ParameterError(family.slug + ": wrong number of parameters");
        }
        ComplexPolynomial num{cplx{1.0}};
        for (const cplx& a : params) num = num * ComplexPolynomial{-std::conj(a), 1.0};
        // (z^2 - 1)(z^2 - q)
        return {num, ComplexPolynomial{q, 0.0, -(1.0 + q), 0.0, 1.0}};
    }
    const auto v = potential_function(family, params, q);
    return {v.numerator().conjugated(), v.denominator().conjugated()};
}

cplx potential_value(const DiscreteFamily& family, const ParameterVector& lambda, cplx point, double q) {
    family.validate(lambda, q);
    return potential_function(family, as_complex(lambda), q)(point);
}

cplx conjugate_potential_value(const DiscreteFamily& family, const ParameterVector& lambda, cplx point, double q) {
    family.validate(lambda, q);
    return conjugate_potential_function(family, as_complex(lambda), q)(point);
}

std::vector<cplx> shifted_parameters(const DiscreteFamily& family, const ParameterVector& lambda, double q) {
    std::vector<cplx> out = as_complex(lambda);
    if (family.shift_kind == ShiftKind::Multiplicative) {
        for (auto& v : out) v *= std::sqrt(q);
    } else {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += family.delta[i];
    }
    return out;
}

namespace {

// Weight of V(.; shifted) in V_s.
double shifted_weight(const DiscreteFamily& family, double s, double q) {
    return family.shift_kind == ShiftKind::Multiplicative ? s / q : s;
}

}  // namespace

cplx interp_potential_value(const DiscreteFamily& family, const ParameterVector& lambda, double s, cplx point,
                            double q) {
    family.validate(lambda, q);
    check_s(s);
    const auto v0 = potential_function(family, as_complex(lambda), q);
    const auto v1 = potential_function(family, shifted_parameters(family, lambda, q), q);
    return (1.0 - s) * v0(point) + shifted_weight(family, s, q) * v1(point);
}

cplx interp_conjugate_potential_value(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                      cplx point, double q) {
    family.validate(lambda, q);
    check_s(s);
    const auto v0 = conjugate_potential_function(family, as_complex(lambda), q);
    const auto v1 = conjugate_potential_function(family, shifted_parameters(family, lambda, q), q);
    return (1.0 - s) * v0(point) + shifted_weight(family, s, q) * v1(point);
}

// ---------------------------------------------------------------------------
// Shift solver
// ---------------------------------------------------------------------------

namespace {

// Right-hand sides of the shift systems, in working precision R.
template <class R>
std::vector<R> targets_impl(const DiscreteFamily& family, const ParameterVector& lambda, R s, R q, R* alpha_out) {
    // e_0..e_m of the (real) parameters
    std::vector<R> e{R(1)};
    for (const auto& p : lambda) {
        e.push_back(R(0));
        for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += static_cast<R>(p.value) * e[k - 1];
    }
    auto E = [&](std::size_t k) { return e[k]; };

    R alpha = 1;
    std::vector<R> t;
    switch (family.id) {
        case DiscreteId::MeixnerPollaczek:
            t = {E(1) + s / 2};
            break;
        case DiscreteId::ContinuousHahn:
            t = {E(1) + s, E(2) + E(1) * s / 2 + s / 4};
            break;
        case DiscreteId::ContinuousDualHahn:
            t = {E(1) + 3 * s / 2, E(2) + E(1) * s + 3 * s / 4, E(3) + E(2) * s / 2 + E(1) * s / 4 + s / 8};
            break;
        case DiscreteId::Wilson:
            t = {E(1) + 2 * s, E(2) + 3 * E(1) * s / 2 + 3 * s / 2, E(3) + E(2) * s + 3 * E(1) * s / 4 + s / 2,
                 E(4) + E(3) * s / 2 + E(2) * s / 4 + E(1) * s / 8 + s / 16};
            break;
        case DiscreteId::AskeyWilson: {
            alpha = 1 + (1 / q - 1) * s;
            const R rq = std::sqrt(q);
            t = {(1 + (1 / rq - 1) * s) / alpha * E(1), E(2) / alpha, (1 - (1 - rq) * s) / alpha * E(3),
                 (1 - (1 - q) * s) / alpha * E(4)};
            break;
        }
    }
    if (alpha_out) *alpha_out = alpha;
    return t;
}

using lcplx = std::complex<long double>;

// Newton refinement of isolated roots against the extended-precision monic polynomial.
void polish_extended(std::vector<cplx>& roots, const std::vector<long double>& targets) {
    const std::size_t m = targets.size();
    std::vector<lcplx> c(m + 1);
    c[m] = 1;
    for (std::size_t k = 1; k <= m; ++k) c[m - k] = (k % 2 ? -1.0L : 1.0L) * targets[k - 1];
    auto eval = [&](lcplx t, lcplx& dp) {
        lcplx p = c[m];
        dp = 0;
        for (std::size_t i = m; i-- > 0;) {
            dp = dp * t + p;
            p = p * t + c[i];
        }
        return p;
    };
    for (std::size_t i = 0; i < roots.size(); ++i) {
        bool isolated = true;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j != i && std::abs(roots[i] - roots[j]) <= 1e-6 * std::max(1.0, std::abs(roots[i]))) isolated = false;
        }
        if (!isolated) continue;
        lcplx r(roots[i].real(), roots[i].imag());
        for (int it = 0; it < 3; ++it) {
            lcplx dp;
            const lcplx p = eval(r, dp);
            if (dp == lcplx(0)) break;
            const lcplx next = r - p / dp;
            lcplx dn;
            if (!(std::abs(eval(next, dn)) < std::abs(p))) break;
            r = next;
        }
        roots[i] = cplx(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
}

}  // namespace

std::vector<double> shift_targets(const DiscreteFamily& family, const ParameterVector& lambda, double s, double q,
                                  double* alpha_out) {
    family.validate(lambda, q);
    check_s(s);
    long double alpha = 1;
    const auto t = targets_impl<long double>(family, lambda, s, q, &alpha);
    if (alpha_out) *alpha_out = static_cast<double>(alpha);
    return {t.begin(), t.end()};
}

double multiset_distance(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double scale = std::max(1.0, std::max(std::abs(a[i]), std::abs(b[perm[i]])));
            worst = std::max(worst, std::abs(a[i] - b[perm[i]]) / scale);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

ShiftSolveResult solve_shifted_parameters(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                          double q) {
    ShiftSolveResult result;
    result.targets = shift_targets(family, lambda, s, q, &result.alpha);
    const std::size_t m = result.targets.size();

    // prod (t - lambda'_i) = sum_k (-1)^k e_k t^{m-k}
    std::vector<cplx> coeffs(m + 1);
    coeffs[m] = 1.0;
    for (std::size_t k = 1; k <= m; ++k) coeffs[m - k] = (k % 2 ? -1.0 : 1.0) * result.targets[k - 1];
    result.lambda_prime = polynomial_roots(ComplexPolynomial(coeffs));
    polish_extended(result.lambda_prime, targets_impl<long double>(family, lambda, s, q, nullptr));
    canonical_sort(result.lambda_prime);

    const auto e = elementary_symmetric(result.lambda_prime);
    for (std::size_t k = 1; k <= m; ++k) {
        result.max_defect = std::max(result.max_defect, std::abs(e[k] - result.targets[k - 1]) /
                                                            std::max(1.0, std::abs(result.targets[k - 1])));
    }
    if (!(result.max_defect <= 1e-9)) {
        std::ostringstream msg;
        msg << family.slug << ": Vieta defect " << result.max_defect << " of solved parameters exceeds 1e-9";
        throw DefectError(msg.str());
    }

    result.delta_E_tilde = s * spectrum(family, lambda, 1, q);
    if (s == 0.0) {
        result.boundary_matched = multiset_distance(result.lambda_prime, as_complex(lambda)) <= 1e-10;
    } else if (s == 1.0) {
        result.boundary_matched =
            multiset_distance(result.lambda_prime, shifted_parameters(family, lambda, q)) <= 1e-10;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

std::vector<cplx> default_sample_points(const DiscreteFamily& family, std::size_t count) {
    std::vector<cplx> pts;
    pts.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double u = (static_cast<double>(j) + 0.5) / static_cast<double>(count);
        if (family.eta_kind == EtaKind::Cosine) {
            const double theta = 0.05 + (std::numbers::pi - 0.1) * u;
            pts.push_back(std::polar(1.0, theta));
        } else {
            pts.emplace_back(0.2 + 9.8 * u, 0.4 * std::sin(2.3 * static_cast<double>(j) + 0.7));
        }
    }
    return pts;
}

ResidualReport verify_potential_identity(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                         std::span<const cplx> points, double q) {
    const auto shift = solve_shifted_parameters(family, lambda, s, q);
    const auto v_prime = potential_function(family, shift.lambda_prime, q);

    ResidualReport report;
    report.family = family.slug;
    report.s = s;
    report.points = points.size();
    report.window = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const cplx& p : points) {
        const cplx lhs = interp_potential_value(family, lambda, s, p, q);
        const cplx rhs = shift.alpha * v_prime(p);
        const double diff = std::abs(lhs - rhs);
        report.scale = std::max(report.scale, std::abs(lhs));
        report.window.lo = std::min(report.window.lo, std::abs(p));
        report.window.hi = std::max(report.window.hi, std::abs(p));
        if (!(diff <= report.max_abs_residual)) {
            report.max_abs_residual = diff;
            report.argmax = p;
        }
    }
    return report;
}

cplx energy_level(const DiscreteFamily& family, std::span<const cplx> params, int n, double q) {
    if (n < 0) throw IndexError("level index must be non-negative");
    if (params.size() != family.parameter_count()) {
        throw ParameterError(family.slug + ": wrong number of parameters");
    }
    const double k = n;
    const auto e = elementary_symmetric(params);
    switch (family.id) {
        case DiscreteId::MeixnerPollaczek:
            return 2.0 * k;
        case DiscreteId::ContinuousHahn:
            return k * (k + 2.0 * e[1] - 1.0);
        case DiscreteId::ContinuousDualHahn:
            return k;
        case DiscreteId::Wilson:
            return k * (k + e[1] - 1.0);
        case DiscreteId::AskeyWilson:
            return (std::pow(q, -k) - 1.0) * (1.0 - e[4] * std::pow(q, k - 1.0));
    }
    throw ParameterError("unknown discrete family");
}

double spectrum(const DiscreteFamily& family, const ParameterVector& lambda, int n, double q) {
    family.validate(lambda, q);
    return energy_level(family, as_complex(lambda), n, q).real();
}

Eigen::MatrixXcd build_htilde_matrix(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                     int max_degree, double q) {
    family.validate(lambda, q);
    check_s(s);
    if (max_degree < 1) throw IndexError("max_degree must be at least 1");

    const auto params = as_complex(lambda);
    const auto shifted = shifted_parameters(family, lambda, q);
    const double w1 = shifted_weight(family, s, q);
    const auto v0 = potential_function(family, params, q);
    const auto v1 = potential_function(family, shifted, q);
    const auto c0 = conjugate_potential_function(family, params, q);
    const auto c1 = conjugate_potential_function(family, shifted, q);
    const double constant = s * spectrum(family, lambda, 1, q);

    const bool dilation = family.eta_kind == EtaKind::Cosine;
    auto down = [&](cplx p) { return dilation ? q * p : p - kI; };  // e^{-i d/dx}, q^D
    auto up = [&](cplx p) { return dilation ? p / q : p + kI; };    // e^{+i d/dx}, q^{-D}

    // eta nodes on the unit circle, never real: the monomial basis is then
    // orthogonal over the nodes and the fit is perfectly conditioned.
    const int n_nodes = 2 * (max_degree + 1);
    struct Node {
        cplx eta, eta_down, eta_up, vs, vs_conj;
    };
    std::vector<Node> nodes;
    nodes.reserve(n_nodes);
    for (int j = 0; j < n_nodes; ++j) {
        const cplx eta = std::polar(1.0, std::numbers::pi * (2.0 * j + 1.0) / n_nodes);
        const cplx p = point_for_eta(family.eta_kind, eta);
        nodes.push_back({eta_of(family.eta_kind, p), eta_of(family.eta_kind, down(p)), eta_of(family.eta_kind, up(p)),
                         (1.0 - s) * v0(p) + w1 * v1(p), (1.0 - s) * c0(p) + w1 * c1(p)});
    }

    const int size = max_degree + 1;
    Eigen::MatrixXcd matrix(size, size);
    std::vector<FitSample> samples(nodes.size());
    for (int k = 0; k < size; ++k) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const Node& nd = nodes[j];
            const cplx f = std::pow(nd.eta, k);
            const cplx value =
                nd.vs * (std::pow(nd.eta_down, k) - f) + nd.vs_conj * (std::pow(nd.eta_up, k) - f) + constant * f;
            samples[j] = {nd.eta, value};
        }
        const auto fit = fit_polynomial(samples, static_cast<std::size_t>(max_degree));
        for (int r = 0; r < size; ++r) matrix(r, k) = fit.coefficients[r];
    }
    return matrix;
}

SpectrumCheck verify_interpolated_spectrum(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                           int max_degree, double q, double tolerance) {
    SpectrumCheck check;
    check.shift = solve_shifted_parameters(family, lambda, s, q);
    const Eigen::MatrixXcd m = build_htilde_matrix(family, lambda, s, max_degree, q);
    check.matrix_scale = m.cwiseAbs().maxCoeff();

    double below = 0.0;
    for (int k = 0; k < m.cols(); ++k) {
        for (int r = k + 1; r < m.rows(); ++r) below = std::max(below, std::abs(m(r, k)));
    }
    check.triangular_defect = below / std::max(check.matrix_scale, 1e-300);

    auto& report = check.diagonal;
    report.family = family.slug;
    report.s = s;
    report.points = static_cast<std::size_t>(max_degree + 1);
    report.window = {0.0, static_cast<double>(max_degree)};
    for (int n = 0; n <= max_degree; ++n) {
        const cplx expected = check.shift.alpha * energy_level(family, check.shift.lambda_prime, n, q) +
                              check.shift.delta_E_tilde;
        check.expected.push_back(expected);
        check.computed.push_back(m(n, n));
        report.scale = std::max(report.scale, std::abs(expected));
        const double diff = std::abs(m(n, n) - expected);
        if (!(diff <= report.max_abs_residual)) {
            report.max_abs_residual = diff;
            report.argmax = static_cast<double>(n);
        }
    }

    if (!(check.triangular_defect <= tolerance)) {
        std::ostringstream msg;
        msg << family.slug << ": H~_s is not degree-triangular (relative below-diagonal "
            << check.triangular_defect << ")";
        throw DefectError(msg.str());
    }
    if (!(report.relative_residual() <= tolerance)) {
        std::ostringstream msg;
        msg << family.slug << ": diagonal of H~_s misses alpha E_n(lambda') + s E_1 by "
            << report.relative_residual() << " at n=" << report.argmax_x();
        throw DefectError(msg.str());
    }
    return check;
}

}  // namespace susy
