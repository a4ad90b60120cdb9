// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "susy/continuum_interp.hpp"
#include "susy/discrete_families.hpp"
#include "susy/sampling.hpp"
#include "susy/spectral.hpp"

using namespace susy;

namespace {

constexpr int kDraws = 20;
const double kSGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
constexpr double kQ = 0.5;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

void criterion_operator_identity() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    int cases = 0;
    Rng rng(1001);
    for (const auto& f : continuum_catalog()) {
        const auto grid = default_grid(f, 1000);
        for (int d = 0; d < kDraws; ++d) {
            const auto p = random_parameters(f, rng);
            for (double s : kSGrid) {
                worst = std::max(worst, verify_operator_interpolation(f, p, s, grid).relative_residual());
                ++cases;
            }
        }
    }
    const double t = seconds_since(t0);
    report(1, "operator-interpolation identity", worst <= 1e-9 && t < 5.0,
           fmt("worst relative residual %.3e (tol 1e-9) over %d cases, %.3f s (limit 5 s)", worst, cases, t));
}

void criterion_shape_invariance() {
    double worst = 0.0;
    int cases = 0;
    Rng rng(1002);
    for (const auto& f : continuum_catalog()) {
        for (int d = 0; d < kDraws; ++d) {
            worst = std::max(worst, verify_shape_invariance(f, random_parameters(f, rng), default_grid(f)).relative_residual());
            ++cases;
        }
    }
    report(2, "shape-invariance identity", worst <= 1e-9,
           fmt("worst relative residual %.3e (tol 1e-9) over %d cases", worst, cases));
}

void criterion_prepotential_identity() {
    double worst = 0.0;
    int cases = 0;
    Rng rng(1003);
    for (const auto& f : continuum_catalog()) {
        for (int d = 0; d < kDraws; ++d) {
            const auto p = random_parameters(f, rng);
            for (double s : kSGrid) {
                worst = std::max(worst, verify_prepotential_interpolation(f, p, s, default_grid(f)).max_abs_residual);
                ++cases;
            }
        }
    }
    report(3, "prepotential-interpolation identity", worst <= 1e-11,
           fmt("worst absolute residual %.3e (tol 1e-11) over %d cases", worst, cases));
}

void criterion_isospectrality() {
    const auto t0 = Clock::now();
    const auto& spt = continuum_family(ContinuumId::SymmetricPoschlTeller);
    const ParameterVector lambda{{"g", 2.0}};
    const Grid1D grid(0.0, std::numbers::pi, 2000);
    // E_n(g) = n(n + 2g); the s = 0.5 partner has g' = (1 + sqrt 17)/2 and dE = g'^2 - g^2.
    const double gp = (1.0 + std::sqrt(17.0)) / 2.0;
    struct Case {
        double s;
        double g;
        double shift;
    } cases[] = {{0.0, 2.0, 0.0}, {1.0, 3.0, 5.0}, {0.5, gp, gp * gp - 4.0}};
    double worst = 0.0;
    std::string values;
    for (const auto& c : cases) {
        const auto op = discretize([&](double x) { return interp_potential_U_s(spt, lambda, c.s, x); }, grid);
        const auto ev = eigen_lowest(op, 5);
        for (int n = 0; n < 5; ++n) {
            const double exact = n * (n + 2.0 * c.g) + c.shift;
            worst = std::max(worst, std::abs(ev[n] - exact) / std::max(1.0, std::abs(exact)));
        }
        values += fmt(" s=%.1f:{%.4f,%.4f,%.4f,%.4f,%.4f}", c.s, ev[0], ev[1], ev[2], ev[3], ev[4]);
    }
    const double t = seconds_since(t0);
    report(4, "numerical isospectrality (symmetric Poschl-Teller, g=2, n=2000)", worst <= 2e-3 && t < 10.0,
           fmt("worst relative error %.3e (tol 2e-3), %.3f s (limit 10 s);", worst, t) + values);
}

void criterion_discrete_identity() {
    double worst = 0.0;
    int cases = 0;
    Rng rng(1005);
    for (const auto& f : discrete_catalog()) {
        const auto pts = default_sample_points(f, 50);
        for (int d = 0; d < kDraws; ++d) {
            const auto p = random_parameters(f, rng, kQ);
            for (int j = 0; j <= 20; ++j) {
                worst = std::max(worst, verify_potential_identity(f, p, j / 20.0, pts, kQ).relative_residual());
                ++cases;
            }
        }
    }
    report(5, "discrete potential identity", worst <= 1e-9,
           fmt("worst relative residual %.3e (tol 1e-9) over %d cases, 50 points each", worst, cases));
}

void criterion_boundary_solutions() {
    double worst = 0.0;
    int cases = 0;
    Rng rng(1006);
    for (const auto& f : discrete_catalog()) {
        for (int d = 0; d < kDraws; ++d) {
            const auto p = random_parameters(f, rng, kQ);
            std::vector<cplx> start;
            for (const auto& e : p) start.emplace_back(e.value, 0.0);
            const auto r0 = solve_shifted_parameters(f, p, 0.0, kQ);
            const auto r1 = solve_shifted_parameters(f, p, 1.0, kQ);
            worst = std::max(worst, multiset_distance(r0.lambda_prime, start));
            worst = std::max(worst, multiset_distance(r1.lambda_prime, shifted_parameters(f, p, kQ)));
            worst = std::max(worst, std::abs(r0.alpha - 1.0));
            worst = std::max(worst, std::abs(r1.alpha - (f.uses_q() ? 1.0 / kQ : 1.0)));
            cases += 2;
        }
    }
    report(6, "shift-solver boundary exactness", worst <= 1e-10,
           fmt("worst multiset/alpha deviation %.3e (tol 1e-10) over %d cases", worst, cases));
}

void criterion_matrix_spectra() {
    double worst_tri = 0.0;
    double worst_diag = 0.0;
    int cases = 0;
    int failed = 0;
    Rng rng(1007);
    for (const auto& f : discrete_catalog()) {
        for (int d = 0; d < kDraws; ++d) {
            const auto p = random_parameters(f, rng, kQ);
            for (double s : kSGrid) {
                try {
                    const auto c = verify_interpolated_spectrum(f, p, s, 10, kQ, 1e-8);
                    worst_tri = std::max(worst_tri, c.triangular_defect);
                    worst_diag = std::max(worst_diag, c.diagonal.relative_residual());
                } catch (const std::exception&) {
                    ++failed;
                }
                ++cases;
            }
        }
    }
    report(7, "operator-matrix spectra (N=10)", failed == 0 && worst_tri <= 1e-8 && worst_diag <= 1e-8,
           fmt("worst below-diagonal %.3e, worst diagonal error %.3e (tol 1e-8) over %d cases, %d failed", worst_tri,
               worst_diag, cases, failed));
}

void criterion_convergence_order() {
    const auto& ho = continuum_family(ContinuumId::HarmonicOscillator);
    const ParameterVector lambda{{"omega", 1.0}};
    auto U = [&](double x) { return potential_U(ho, lambda, x); };
    auto errors = [&](int n) {
        const auto ev = eigen_lowest(discretize(U, Grid1D(-10.0, 10.0, n)), 3);
        std::vector<double> e;
        for (int k = 0; k < 3; ++k) e.push_back(std::abs(ev[k] - 2.0 * k));
        return e;
    };
    // h = 20/200 and 20/400
    const auto coarse = errors(199);
    const auto fine = errors(399);
    bool pass = true;
    std::string ratios;
    for (int k = 0; k < 3; ++k) {
        const double r = coarse[k] / fine[k];
        pass = pass && r >= 3.5 && r <= 4.5;
        ratios += fmt(" E_%d: %.4f", k, r);
    }
    report(8, "eigensolver convergence order (harmonic oscillator, h=0.1 -> 0.05)", pass,
           "error ratios" + ratios + " (required in [3.5, 4.5])");
}

}  // namespace

int main() {
    criterion_operator_identity();
    criterion_shape_invariance();
    criterion_prepotential_identity();
    criterion_isospectrality();
    criterion_discrete_identity();
    criterion_boundary_solutions();
    criterion_matrix_spectra();
    criterion_convergence_order();
    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures;
}
