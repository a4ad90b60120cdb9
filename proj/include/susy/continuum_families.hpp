#pragma once

/**
 * @file continuum_families.hpp
 * @brief Catalog of shape-invariant potentials of ordinary quantum mechanics.
 *
 * Each family is described by a prepotential W(x; lambda) with
 * H(lambda) = A^dagger A = -d^2/dx^2 + W'^2 + W'', a parameter shift delta with
 * A A^dagger = H(lambda + delta) + E_1(lambda), and a closed-form spectrum.
 *
 * Two interpolations H_s = (1-s) A^dagger A + s A A^dagger are supported:
 *  - coupling_map: H_s = H(lambda') + dE(lambda, s) at operator level,
 *    where H_s = H - 2 s W''.
 *  - prepotential_coupling_map: W_s = (1-s) W(lambda) + s W(lambda+delta)
 *    equals W(lambda'), with ground-state shift s E_1(lambda).
 */

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "susy/parameters.hpp"

namespace susy {

enum class ContinuumId {
    HarmonicOscillator,
    RadialOscillator,
    SymmetricPoschlTeller,
    Soliton,
    Morse,
    HyperbolicSymmetricTop,
    PoschlTeller,
    RosenMorse,
    Coulomb,
};

/// Lower/upper bound of a single coupling constant.
struct ParameterRange {
    std::string name;
    double lo = -1e300;
    double hi = 1e300;
    bool lo_inclusive = false;
    bool hi_inclusive = false;

    bool admits(double v) const noexcept {
        const bool above = lo_inclusive ? v >= lo : v > lo;
        const bool below = hi_inclusive ? v <= hi : v < hi;
        return above && below;
    }
    std::string describe() const;
};

/// Immutable descriptor of one continuum family.
struct ContinuumFamily {
    ContinuumId id;
    std::string slug;  // kebab-case CLI name
    std::string display_name;
    std::vector<ParameterRange> ranges;  // one per parameter, in order
    std::vector<double> delta;           // shape-invariance shift
    Interval domain;                     // open interval
    bool finite_spectrum = false;
    Interval verification_window;        // default window for identity sweeps
    Interval eigen_window;               // default Dirichlet box for eigensolves
    std::string constraint_note;         // cross-parameter constraint, if any

    std::vector<std::string> parameter_names() const;
    std::size_t parameter_count() const noexcept { return ranges.size(); }

    /// Throws ParameterError on a name mismatch or range violation.
    void validate(const ParameterVector& lambda) const;
    /// Names must match; returns the first range violation, if any.
    std::optional<std::string> range_violation(const ParameterVector& lambda) const;
    bool is_valid(const ParameterVector& lambda) const;

    /// lambda + delta.
    ParameterVector shifted(const ParameterVector& lambda) const { return lambda.shifted(delta); }

    /// Number of bound states; nullopt when infinite.
    std::optional<int> bound_state_count(const ParameterVector& lambda) const;
};

std::span<const ContinuumFamily> continuum_catalog();
const ContinuumFamily& continuum_family(ContinuumId id);
/// Lookup by slug or short alias (ho, spt, ...); nullptr when unknown.
const ContinuumFamily* find_continuum_family(std::string_view name);

/// Strict checks lambda against the family ranges; Relaxed only requires the
/// right names and finite values (for shifted parameters that may leave the
/// physical range while the formulas stay meaningful).
enum class Validation { Strict, Relaxed };

double prepotential(const ContinuumFamily& family, const ParameterVector& lambda, double x,
                    Validation mode = Validation::Strict);

struct PrepotentialDerivatives {
    double first = 0.0;   // W'
    double second = 0.0;  // W''
};

PrepotentialDerivatives prepotential_derivatives(const ContinuumFamily& family, const ParameterVector& lambda,
                                                 double x, Validation mode = Validation::Strict);

/// U = W'^2 + W''.
double potential_U(const ContinuumFamily& family, const ParameterVector& lambda, double x,
                   Validation mode = Validation::Strict);

/// Closed-form level E_n(lambda) without any bound-state check. Shape
/// invariance uses E_1(lambda) even where level 1 is not normalizable.
double energy_level(const ContinuumFamily& family, const ParameterVector& lambda, int n,
                    Validation mode = Validation::Strict);

/// E_n(lambda); throws IndexError when n is not a bound state.
double spectrum(const ContinuumFamily& family, const ParameterVector& lambda, int n);

struct InterpolationResult {
    ParameterVector lambda_prime;
    double delta_E = 0.0;
    double alpha = 1.0;
    double residual = 0.0;  // algebraic defect of the map (0 when exact)
    std::string branch_note;
    std::vector<std::string> warnings;  // e.g. lambda' outside the physical range
};

/// g' = (1 + sqrt(1 + 4 g (g + 2s - 1))) / 2, so g'(g'-1) = g(g+2s-1).
double raised_coupling(double g, double s);
/// g'' = (-1 + sqrt(1 + 4 g (g + 1 - 2s))) / 2, so g''(g''+1) = g(g+1-2s).
double lowered_coupling(double g, double s);

/// Operator-level map: H - 2 s W'' = H(lambda') + dE.
InterpolationResult coupling_map(const ContinuumFamily& family, const ParameterVector& lambda, double s);

/// Prepotential-level map: (1-s) W(lambda) + s W(lambda+delta) = W(lambda'),
/// dE = s E_1(lambda). Throws ParameterError if lambda' is not valid.
InterpolationResult prepotential_coupling_map(const ContinuumFamily& family, const ParameterVector& lambda,
                                              double s);

}  // namespace susy
