#include "susy/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "susy/errors.hpp"

namespace susy {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

// ---------------------------------------------------------------------------
// Finite differences and Sturm bisection
// ---------------------------------------------------------------------------

Grid1D::Grid1D(double a, double b, int n) : a_(a), b_(b), n_(n) {
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b)) {
        throw DomainError("grid requires finite a < b");
    }
    if (n < 3) throw DomainError("grid requires at least 3 interior points");
}

TridiagonalOperator discretize(const std::function<double(double)>& potential, const Grid1D& grid) {
    const int n = grid.size();
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);

    TridiagonalOperator op;
    op.diagonal.resize(n);
    op.off_diagonal.assign(n - 1, -inv_h2);
    for (int i = 1; i <= n; ++i) {
        const double x = grid.point(i);
        const double u = potential(x);
        if (!std::isfinite(u)) {
            std::ostringstream msg;
            msg << "potential is not finite at x=" << x;
            throw EvaluationError(msg.str());
        }
        op.diagonal[i - 1] = 2.0 * inv_h2 + u;
    }
    return op;
}

std::size_t sturm_count(const TridiagonalOperator& op, double x) {
    const std::size_t n = op.size();
    if (n == 0) return 0;

    double max_e2 = std::numeric_limits<double>::min();
    for (double e : op.off_diagonal) max_e2 = std::max(max_e2, e * e);
    const double pivmin = std::numeric_limits<double>::min() * max_e2;

    std::size_t count = 0;
    double q = op.diagonal[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        const double e = op.off_diagonal[i - 1];
        q = op.diagonal[i] - x - e * e / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> eigen_lowest(const TridiagonalOperator& op, std::size_t k, double rel_tol) {
    const std::size_t n = op.size();
    if (op.off_diagonal.size() + 1 != n) {
        throw DomainError("off-diagonal length must be one less than the diagonal");
    }
    if (k < 1 || k > n) throw IndexError("eigen_lowest requires 1 <= k <= n");

    // Gershgorin enclosure.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
        lo = std::min(lo, op.diagonal[i] - radius);
        hi = std::max(hi, op.diagonal[i] + radius);
    }
    const double norm = std::max(std::abs(lo), std::abs(hi));
    const double abs_floor = 2.0 * kEps * std::max(norm, std::numeric_limits<double>::min());
    lo -= abs_floor;
    hi += abs_floor;

    constexpr int kMaxIterations = 1000;
    std::vector<double> out(k);
    double left = lo;
    for (std::size_t j = 0; j < k; ++j) {
        // Invariant: count(a) <= j < count(b).
        double a = left;
        double b = hi;
        int it = 0;
        while (b - a > std::max(rel_tol * std::max(std::abs(a), std::abs(b)), abs_floor)) {
            if (++it > kMaxIterations) throw ConvergenceError("Sturm bisection did not converge");
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (sturm_count(op, mid) > j) {
                b = mid;
            } else {
                a = mid;
            }
        }
        out[j] = 0.5 * (a + b);
        left = a;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coefficients) : coeffs_(std::move(coefficients)) {
    while (coeffs_.size() > 1 && coeffs_.back() == cplx{0.0}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(cplx{0.0});
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const cplx> roots) {
    std::vector<cplx> c{cplx{1.0}};
    for (const cplx& r : roots) {
        std::vector<cplx> next(c.size() + 1, cplx{0.0});
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return ComplexPolynomial(std::move(c));
}

cplx ComplexPolynomial::operator()(cplx t) const noexcept {
    cplx acc{0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (coeffs_.size() == 1) return ComplexPolynomial{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::conjugated() const {
    std::vector<cplx> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](cplx v) { return std::conj(v); });
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    std::vector<cplx> c(p.coeffs_.size() + q.coeffs_.size() - 1, cplx{0.0});
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    std::vector<cplx> c(std::max(p.coeffs_.size(), q.coeffs_.size()), cplx{0.0});
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator*(cplx k, const ComplexPolynomial& p) {
    std::vector<cplx> c = p.coeffs_;
    for (auto& v : c) v *= k;
    return ComplexPolynomial(std::move(c));
}

std::vector<cplx> elementary_symmetric(std::span<const cplx> values) {
    std::vector<cplx> e(values.size() + 1, cplx{0.0});
    e[0] = 1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += values[i] * e[k - 1];
    }
    return e;
}

namespace {

// max_k |monic coefficient from roots - target monic coefficient|, scaled.
double vieta_defect(std::span<const cplx> roots, const std::vector<cplx>& monic) {
    const ComplexPolynomial rebuilt = ComplexPolynomial::from_roots(roots);
    const auto& c = rebuilt.coefficients();
    double defect = 0.0;
    for (std::size_t i = 0; i < monic.size(); ++i) {
        const cplx ci = i < c.size() ? c[i] : cplx{0.0};
        defect = std::max(defect, std::abs(ci - monic[i]) / std::max(1.0, std::abs(monic[i])));
    }
    return defect;
}

}  // namespace

std::vector<cplx> polynomial_roots(const ComplexPolynomial& p) {
    const std::size_t m = p.degree();
    if (m < 1) throw DomainError("polynomial_roots requires degree >= 1");

    std::vector<cplx> monic(p.coefficients());
    const cplx lead = p.leading();
    for (auto& c : monic) c /= lead;

    if (m == 1) return {-monic[0]};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    for (std::size_t i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < m; ++i) companion(i, m - 1) = -monic[i];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solve failed");

    std::vector<cplx> roots(m);
    for (std::size_t i = 0; i < m; ++i) roots[i] = solver.eigenvalues()[i];
    for (const auto& r : roots) {
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
            throw ConvergenceError("companion eigenvalues are not finite");
        }
    }

    // One Newton step per root, kept only when it lowers |p|.
    const ComplexPolynomial q(monic);
    const ComplexPolynomial dq = q.derivative();
    for (auto& r : roots) {
        const cplx value = q(r);
        const cplx slope = dq(r);
        if (slope == cplx{0.0}) continue;
        const cplx candidate = r - value / slope;
        if (std::abs(q(candidate)) < std::abs(value)) r = candidate;
    }

    // Collapse clusters (multiple roots split by rounding) to their centroid
    // when that does not worsen the Vieta match.
    std::vector<int> cluster(m, -1);
    int clusters = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (cluster[i] >= 0) continue;
        cluster[i] = clusters;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < m; ++b) {
                if (cluster[b] >= 0) continue;
                const double scale = std::max(1.0, std::max(std::abs(roots[a]), std::abs(roots[b])));
                if (std::abs(roots[a] - roots[b]) < 1e-3 * scale) {
                    cluster[b] = clusters;
                    stack.push_back(b);
                }
            }
        }
        ++clusters;
    }
    for (int c = 0; c < clusters; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < m; ++i) {
            if (cluster[i] == c) members.push_back(i);
        }
        if (members.size() < 2) continue;
        cplx centroid{0.0};
        for (auto i : members) centroid += roots[i];
        centroid /= static_cast<double>(members.size());
        // A k-fold root is a simple root of the (k-1)-th derivative.
        ComplexPolynomial dk = q;
        for (std::size_t d = 1; d < members.size(); ++d) dk = dk.derivative();
        const ComplexPolynomial dk1 = dk.derivative();
        for (int it = 0; it < 8; ++it) {
            const cplx value = dk(centroid);
            const cplx slope = dk1(centroid);
            if (slope == cplx{0.0}) break;
            const cplx next = centroid - value / slope;
            if (!(std::abs(dk(next)) < std::abs(value))) break;
            centroid = next;
        }
        std::vector<cplx> candidate = roots;
        for (auto i : members) candidate[i] = centroid;
        const double before = vieta_defect(roots, monic);
        const double after = vieta_defect(candidate, monic);
        if (after <= std::max(before, 64.0 * kEps)) roots = std::move(candidate);
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Newton
// ---------------------------------------------------------------------------

NewtonResult newton_2d(const Map2D& f, const Jacobian2D& jacobian, std::array<double, 2> seed,
                       const NewtonOptions& options) {
    auto inf_norm = [](const std::array<double, 2>& v) { return std::max(std::abs(v[0]), std::abs(v[1])); };

    NewtonResult result;
    result.point = seed;
    for (int it = 0;; ++it) {
        const auto value = f(result.point[0], result.point[1]);
        result.residual = inf_norm(value);
        result.iterations = it;
        if (!std::isfinite(result.residual)) throw ConvergenceError("Newton iterate left the finite range");
        if (result.residual <= options.tolerance) return result;
        if (it >= options.max_iterations) {
            std::ostringstream msg;
            msg << "Newton did not reach ||F|| <= " << options.tolerance << " in "
                << options.max_iterations << " iterations (residual " << result.residual << ")";
            throw ConvergenceError(msg.str());
        }
        const auto j = jacobian(result.point[0], result.point[1]);
        const double det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        const double scale = std::max({std::abs(j[0][0]), std::abs(j[0][1]), std::abs(j[1][0]),
                                       std::abs(j[1][1])});
        if (scale == 0.0 || std::abs(det) <= 1e-14 * scale * scale) {
            throw SingularJacobianError("Jacobian is singular at the current Newton iterate");
        }
        const double dx = (j[1][1] * value[0] - j[0][1] * value[1]) / det;
        const double dy = (j[0][0] * value[1] - j[1][0] * value[0]) / det;
        result.point[0] -= dx;
        result.point[1] -= dy;
    }
}

// ---------------------------------------------------------------------------
// Fitting
// ---------------------------------------------------------------------------

PolynomialFit fit_polynomial(std::span<const FitSample> samples, std::size_t degree, double max_condition) {
    const std::size_t m = samples.size();
    const std::size_t cols = degree + 1;
    if (m < cols) throw IllConditionedError("fit_polynomial needs at least degree+1 samples");

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double scale = std::max(1.0, std::max(std::abs(samples[i].t), std::abs(samples[j].t)));
            if (std::abs(samples[i].t - samples[j].t) <= 1e-12 * scale) {
                throw IllConditionedError("fit_polynomial nodes are not pairwise distinct");
            }
        }
    }

    Eigen::MatrixXcd vandermonde(m, cols);
    Eigen::VectorXcd rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        cplx power{1.0};
        for (std::size_t k = 0; k < cols; ++k) {
            vandermonde(i, k) = power;
            power *= samples[i].t;
        }
        rhs(i) = samples[i].value;
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vandermonde, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const double smallest = sigma(sigma.size() - 1);
    const double condition = smallest > 0.0 ? sigma(0) / smallest : std::numeric_limits<double>::infinity();
    if (!(condition <= max_condition)) {
        std::ostringstream msg;
        msg << "Vandermonde condition number " << condition << " exceeds " << max_condition;
        throw IllConditionedError(msg.str());
    }

    const Eigen::VectorXcd c = svd.solve(rhs);
    PolynomialFit fit;
    fit.coefficients.assign(c.data(), c.data() + cols);
    fit.condition_number = condition;
    fit.residual = (vandermonde * c - rhs).cwiseAbs().maxCoeff();
    return fit;
}

}  // namespace susy
