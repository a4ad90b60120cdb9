#pragma once

// Pointwise checks of the interpolation identities for the continuum catalog.

#include <span>
#include <vector>

#include "susy/continuum_families.hpp"
#include "susy/residual_report.hpp"

namespace susy {

/// Uniform sample grid including both endpoints of a closed window.
struct SampleGrid {
    Interval window;
    std::size_t count = 1000;

    std::vector<double> points() const;
};

/// The family's default verification grid (singular endpoints excluded).
SampleGrid default_grid(const ContinuumFamily& family, std::size_t count = 1000);

/// U_s = W'^2 + (1-2s) W'', the potential of (1-s) A^dagger A + s A A^dagger.
double interp_potential_U_s(const ContinuumFamily& family, const ParameterVector& lambda, double s, double x);

/// max |U_s(x; lambda) - U(x; lambda') - dE| with (lambda', dE) from coupling_map.
ResidualReport verify_operator_interpolation(const ContinuumFamily& family, const ParameterVector& lambda,
                                             double s, const SampleGrid& grid);

/// W_s = (1-s) W(x; lambda) + s W(x; lambda+delta).
double interp_prepotential(const ContinuumFamily& family, const ParameterVector& lambda, double s, double x);

/// max |W_s(x; lambda) - W(x; lambda')| with lambda' from prepotential_coupling_map.
ResidualReport verify_prepotential_interpolation(const ContinuumFamily& family, const ParameterVector& lambda,
                                                 double s, const SampleGrid& grid);

/// max |(W'^2 - W'')(lambda) - (W'^2 + W'')(lambda+delta) - E_1(lambda)|.
ResidualReport verify_shape_invariance(const ContinuumFamily& family, const ParameterVector& lambda,
                                       const SampleGrid& grid);

}  // namespace susy
