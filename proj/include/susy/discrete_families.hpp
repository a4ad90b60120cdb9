#pragma once

/**
 * @file discrete_families.hpp
 * @brief Shape-invariant discrete quantum mechanics of the Askey scheme.
 *
 * The similarity-transformed Hamiltonian acts on polynomials in eta as
 *
 *   H~ f = V(x) (f(x - i) - f(x)) + V*(x) (f(x + i) - f(x))     (shift in x)
 *   H~ f = V(z) (f(q z) - f(z)) + V*(z) (f(z / q) - f(z))         (Askey-Wilson)
 *
 * Interpolation replaces V by V_s = (1-s) V(lambda) + s V(lambda + delta)
 * (Askey-Wilson: (1-s) V(lambda) + s q^{-1} V(q^{1/2} lambda)) and adds
 * s E_1(lambda). V_s equals alpha V(lambda'), where the elementary symmetric
 * functions of lambda' are fixed by a closed-form system; lambda' follows by
 * polynomial root finding.
 */

#include <Eigen/Core>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "susy/parameters.hpp"
#include "susy/residual_report.hpp"
#include "susy/spectral.hpp"

namespace susy {

enum class DiscreteId { MeixnerPollaczek, ContinuousHahn, ContinuousDualHahn, Wilson, AskeyWilson };

enum class ShiftKind { Additive, Multiplicative };

/// Polynomial variable of the eigenfunctions.
enum class EtaKind {
    Linear,  // eta = x
    Square,  // eta = x^2
    Cosine,  // eta = cos(theta) = (z + 1/z) / 2
};

inline constexpr double kDefaultQ = 0.5;

struct DiscreteFamily {
    DiscreteId id;
    std::string slug;
    std::string display_name;
    std::vector<std::string> parameter_names;
    ShiftKind shift_kind;
    EtaKind eta_kind;
    std::vector<double> delta;  // additive shift; empty for the q^{1/2} scaling
    std::string range_note;

    std::size_t parameter_count() const noexcept { return parameter_names.size(); }
    bool uses_q() const noexcept { return shift_kind == ShiftKind::Multiplicative; }

    /// Throws ParameterError on wrong names or values outside the range.
    void validate(const ParameterVector& lambda, double q = kDefaultQ) const;
    bool is_valid(const ParameterVector& lambda, double q = kDefaultQ) const;

    double eta(cplx point) const;
};

std::span<const DiscreteFamily> discrete_catalog();
const DiscreteFamily& discrete_family(DiscreteId id);
const DiscreteFamily* find_discrete_family(std::string_view name);

/// numerator / denominator with complex coefficients.
class ComplexRationalFunction {
public:
    ComplexRationalFunction(ComplexPolynomial numerator, ComplexPolynomial denominator);

    /// Throws PoleError within 1e-8 of a denominator root.
    cplx operator()(cplx z) const;
    const ComplexPolynomial& numerator() const noexcept { return num_; }
    const ComplexPolynomial& denominator() const noexcept { return den_; }
    const std::vector<cplx>& poles() const noexcept { return poles_; }

private:
    ComplexPolynomial num_;
    ComplexPolynomial den_;
    std::vector<cplx> poles_;
};

/// V(.; params), params possibly complex.
ComplexRationalFunction potential_function(const DiscreteFamily& family, std::span<const cplx> params,
                                           double q = kDefaultQ);
/// V*(.; params): coefficient conjugate of V in x; for Askey-Wilson the
/// function conj(V(1/conj z)), which coincides with conj(V(z)) on |z| = 1.
ComplexRationalFunction conjugate_potential_function(const DiscreteFamily& family, std::span<const cplx> params,
                                                     double q = kDefaultQ);

cplx potential_value(const DiscreteFamily& family, const ParameterVector& lambda, cplx point,
                     double q = kDefaultQ);
cplx conjugate_potential_value(const DiscreteFamily& family, const ParameterVector& lambda, cplx point,
                               double q = kDefaultQ);

/// Shifted parameters at s = 1: lambda + delta, or q^{1/2} lambda.
std::vector<cplx> shifted_parameters(const DiscreteFamily& family, const ParameterVector& lambda,
                                     double q = kDefaultQ);

/// V_s(point; lambda).
cplx interp_potential_value(const DiscreteFamily& family, const ParameterVector& lambda, double s, cplx point,
                            double q = kDefaultQ);
/// V_s*(point; lambda).
cplx interp_conjugate_potential_value(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                      cplx point, double q = kDefaultQ);

struct ShiftSolveResult {
    std::vector<cplx> lambda_prime;  // descending real part, then imaginary part
    double alpha = 1.0;
    double delta_E_tilde = 0.0;       // s E_1(lambda)
    std::vector<double> targets;      // e_1..e_m of lambda'
    double max_defect = 0.0;          // max_k |e_k(lambda') - target_k| / max(1, |target_k|)
    std::optional<bool> boundary_matched;  // set for s = 0 and s = 1 only
};

/// Target elementary symmetric functions e_1..e_m of lambda' and alpha.
std::vector<double> shift_targets(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                  double q, double* alpha = nullptr);

/// Solves V_s = alpha V(lambda') for lambda'. Throws DefectError when the
/// Vieta defect exceeds 1e-9.
ShiftSolveResult solve_shifted_parameters(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                          double q = kDefaultQ);

/// Smallest max-entry distance over pairings of two equal-size multisets,
/// measured relative to max(1, |entry|).
double multiset_distance(std::span<const cplx> a, std::span<const cplx> b);

/// 50 generic complex points off the poles: a rectangle Re x in [0.2, 10],
/// |Im x| <= 0.4, or z = e^{i theta} with theta in (0.05, pi - 0.05).
std::vector<cplx> default_sample_points(const DiscreteFamily& family, std::size_t count = 50);

/// max |V_s(p; lambda) - alpha V(p; lambda')|.
ResidualReport verify_potential_identity(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                         std::span<const cplx> points, double q = kDefaultQ);

double spectrum(const DiscreteFamily& family, const ParameterVector& lambda, int n, double q = kDefaultQ);
/// E_n for possibly complex parameters (through their symmetric functions).
cplx energy_level(const DiscreteFamily& family, std::span<const cplx> params, int n, double q = kDefaultQ);

/// Matrix of H~_s on the basis 1, eta, ..., eta^N: column k holds the eta
/// coefficients of H~_s eta^k.
Eigen::MatrixXcd build_htilde_matrix(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                     int max_degree, double q = kDefaultQ);

struct SpectrumCheck {
    ResidualReport diagonal;          // argmax holds the worst degree n
    double triangular_defect = 0.0;   // max below-diagonal |entry| / matrix scale
    double matrix_scale = 0.0;
    std::vector<cplx> computed;       // diagonal of the matrix
    std::vector<cplx> expected;       // alpha E_n(lambda') + s E_1(lambda)
    ShiftSolveResult shift;
};

/// Checks that H~_s is degree-triangular with diagonal alpha E_n(lambda') +
/// s E_1(lambda). Throws DefectError when either check exceeds tolerance.
SpectrumCheck verify_interpolated_spectrum(const DiscreteFamily& family, const ParameterVector& lambda, double s,
                                           int max_degree, double q = kDefaultQ, double tolerance = 1e-8);

}  // namespace susy
