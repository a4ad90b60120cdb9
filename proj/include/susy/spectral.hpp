#pragma once

// Numerical kernels shared by the continuum and discrete modules: a
// finite-difference Schroedinger discretization, Sturm-sequence bisection for
// symmetric tridiagonal matrices, complex polynomial roots, a 2D Newton solver
// and polynomial interpolation on complex nodes.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace susy {

using cplx = std::complex<double>;

/// Uniform grid on [a, b] with n interior points x_i = a + i*h, i = 1..n.
/// The endpoints carry Dirichlet walls and are never sampled.
class Grid1D {
public:
    Grid1D(double a, double b, int n);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int size() const noexcept { return n_; }
    double spacing() const noexcept { return (b_ - a_) / (n_ + 1); }
    /// Interior point i, 1 <= i <= n.
    double point(int i) const noexcept { return a_ + i * spacing(); }

private:
    double a_;
    double b_;
    int n_;
};

/// Symmetric tridiagonal matrix.
struct TridiagonalOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  // size() == diagonal.size() - 1

    std::size_t size() const noexcept { return diagonal.size(); }
};

/// Three-point stencil for -d^2/dx^2 + U(x) with Dirichlet boundaries:
/// diagonal 2/h^2 + U(x_i), off-diagonal -1/h^2.
TridiagonalOperator discretize(const std::function<double(double)>& potential, const Grid1D& grid);

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t sturm_count(const TridiagonalOperator& op, double x);

/// The k smallest eigenvalues in ascending order, by bisection on Sturm counts.
/// Each eigenvalue is bracketed to max(rel_tol*|lambda|, eps*||T||).
std::vector<double> eigen_lowest(const TridiagonalOperator& op, std::size_t k,
                                 double rel_tol = 1e-10);

/// Polynomial with complex coefficients in ascending degree. Trailing zero
/// coefficients are trimmed, so the leading coefficient is nonzero unless the
/// polynomial is identically zero.
class ComplexPolynomial {
public:
    ComplexPolynomial() : coeffs_{cplx{0.0}} {}
    explicit ComplexPolynomial(std::vector<cplx> coefficients);
    ComplexPolynomial(std::initializer_list<cplx> coefficients)
        : ComplexPolynomial(std::vector<cplx>(coefficients)) {}

    /// Monic polynomial prod (t - r_i).
    static ComplexPolynomial from_roots(std::span<const cplx> roots);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<cplx>& coefficients() const noexcept { return coeffs_; }
    cplx leading() const noexcept { return coeffs_.back(); }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == cplx{0.0}; }

    cplx operator()(cplx t) const noexcept;
    ComplexPolynomial derivative() const;
    /// Coefficient-wise complex conjugate.
    ComplexPolynomial conjugated() const;

    friend ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q);
    friend ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q);
    friend ComplexPolynomial operator*(cplx c, const ComplexPolynomial& p);

private:
    std::vector<cplx> coeffs_;
};

/// All roots with multiplicity. Companion-matrix eigenvalues, polished by a
/// Newton step where it lowers |p|; clusters that represent one multiple root
/// are collapsed to their centroid when that improves the Vieta match.
std::vector<cplx> polynomial_roots(const ComplexPolynomial& p);

/// Elementary symmetric functions e_0 = 1, e_1, ..., e_m of the values.
std::vector<cplx> elementary_symmetric(std::span<const cplx> values);

struct NewtonOptions {
    double tolerance = 1e-12;  // on ||F||_inf
    int max_iterations = 100;
};

struct NewtonResult {
    std::array<double, 2> point{};
    double residual = 0.0;  // ||F(point)||_inf
    int iterations = 0;
};

using Map2D = std::function<std::array<double, 2>(double, double)>;
using Jacobian2D = std::function<std::array<std::array<double, 2>, 2>(double, double)>;

/// Newton iteration for F(x, y) = 0. Throws SingularJacobianError or
/// ConvergenceError.
NewtonResult newton_2d(const Map2D& f, const Jacobian2D& jacobian, std::array<double, 2> seed,
                       const NewtonOptions& options = {});

struct FitSample {
    cplx t;
    cplx value;
};

struct PolynomialFit {
    std::vector<cplx> coefficients;  // ascending, exactly degree+1 entries
    double residual = 0.0;           // max |p(t_j) - value_j| over all samples
    double condition_number = 0.0;   // of the Vandermonde matrix

    ComplexPolynomial polynomial() const { return ComplexPolynomial(coefficients); }
};

/// Least-squares polynomial of degree <= d through the samples (interpolating
/// when there are exactly d+1). Throws IllConditionedError when the
/// Vandermonde condition number exceeds max_condition or nodes coincide.
PolynomialFit fit_polynomial(std::span<const FitSample> samples, std::size_t degree,
                             double max_condition = 1e12);

}  // namespace susy
