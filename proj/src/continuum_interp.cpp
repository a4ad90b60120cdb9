#include "susy/continuum_interp.hpp"

#include <algorithm>
#include <cmath>

#include "susy/errors.hpp"

namespace susy {

namespace {

template <class Reference, class Candidate>
ResidualReport sweep(const ContinuumFamily& family, double s, const SampleGrid& grid, Reference reference,
                     Candidate candidate) {
    ResidualReport report;
    report.family = family.slug;
    report.s = s;
    report.window = grid.window;
    const auto xs = grid.points();
    report.points = xs.size();
    for (double x : xs) {
        if (!family.domain.contains_open(x)) {
            throw DomainError(family.slug + ": grid point outside the open domain");
        }
        const double ref = reference(x);
        const double diff = std::abs(ref - candidate(x));
        report.scale = std::max(report.scale, std::abs(ref));
        if (!(diff <= report.max_abs_residual)) {
            report.max_abs_residual = diff;
            report.argmax = x;
        }
    }
    return report;
}

}  // namespace

std::vector<double> SampleGrid::points() const {
    if (count < 2 || !window.finite() || !(window.lo < window.hi)) {
        throw DomainError("sample grid needs a finite window and at least two points");
    }
    std::vector<double> xs(count);
    const double step = window.length() / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) xs[i] = window.lo + step * static_cast<double>(i);
    xs.back() = window.hi;
    return xs;
}

SampleGrid default_grid(const ContinuumFamily& family, std::size_t count) {
    return {family.verification_window, count};
}

double interp_potential_U_s(const ContinuumFamily& family, const ParameterVector& lambda, double s, double x) {
    const auto d = prepotential_derivatives(family, lambda, x);
    return d.first * d.first + (1.0 - 2.0 * s) * d.second;
}

ResidualReport verify_operator_interpolation(const ContinuumFamily& family, const ParameterVector& lambda,
                                             double s, const SampleGrid& grid) {
    const auto map = coupling_map(family, lambda, s);
    return sweep(
        family, s, grid, [&](double x) { return interp_potential_U_s(family, lambda, s, x); },
        [&](double x) { return potential_U(family, map.lambda_prime, x, Validation::Relaxed) + map.delta_E; });
}

double interp_prepotential(const ContinuumFamily& family, const ParameterVector& lambda, double s, double x) {
    family.validate(lambda);
    const ParameterVector next = family.shifted(lambda);
    return (1.0 - s) * prepotential(family, lambda, x) + s * prepotential(family, next, x, Validation::Relaxed);
}

ResidualReport verify_prepotential_interpolation(const ContinuumFamily& family, const ParameterVector& lambda,
                                                 double s, const SampleGrid& grid) {
    const auto map = prepotential_coupling_map(family, lambda, s);
    return sweep(
        family, s, grid, [&](double x) { return interp_prepotential(family, lambda, s, x); },
        [&](double x) { return prepotential(family, map.lambda_prime, x); });
}

ResidualReport verify_shape_invariance(const ContinuumFamily& family, const ParameterVector& lambda,
                                       const SampleGrid& grid) {
    family.validate(lambda);
    const ParameterVector next = family.shifted(lambda);
    const double e1 = energy_level(family, lambda, 1);
    return sweep(
        family, 1.0, grid,
        [&](double x) {
            const auto d = prepotential_derivatives(family, lambda, x);
            return d.first * d.first - d.second;
        },
        [&](double x) { return potential_U(family, next, x, Validation::Relaxed) + e1; });
}

}  // namespace susy
