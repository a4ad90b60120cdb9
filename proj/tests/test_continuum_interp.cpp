#include <doctest.h>

#include "oracles.hpp"
#include "susy/continuum_interp.hpp"
#include "susy/errors.hpp"
#include "susy/sampling.hpp"
#include "susy/spectral.hpp"

using namespace susy;
using doctest::Approx;

namespace {

const ContinuumFamily& fam(ContinuumId id) { return continuum_family(id); }

SampleGrid grid(double lo, double hi, std::size_t n) { return SampleGrid{{lo, hi}, n}; }

}  // namespace

TEST_CASE("sample grids") {
    const auto pts = grid(-1.0, 1.0, 5).points();
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == -1.0);
    CHECK(pts.back() == 1.0);
    CHECK(pts[2] == Approx(0.0));

    const auto& spt = fam(ContinuumId::SymmetricPoschlTeller);
    const auto w = default_grid(spt).window;
    CHECK(w.lo == Approx(0.01 * std::numbers::pi));
    CHECK(w.hi == Approx(0.99 * std::numbers::pi));
    CHECK(default_grid(fam(ContinuumId::Coulomb)).window.lo == Approx(0.05));
    CHECK(default_grid(fam(ContinuumId::Coulomb)).window.hi == Approx(15.0));
    CHECK(default_grid(fam(ContinuumId::Soliton)).window.lo == Approx(-10.0));
    CHECK(default_grid(fam(ContinuumId::Soliton)).count == 1000);
}

TEST_CASE("interpolated potential examples") {
    Rng rng(1);
    for (const auto& f : continuum_catalog()) {
        const auto p = random_parameters(f, rng);
        const double x = 0.5 * (f.verification_window.lo + f.verification_window.hi) + 0.123;
        CHECK(interp_potential_U_s(f, p, 0.0, x) == Approx(potential_U(f, p, x)).epsilon(1e-15));
    }

    const auto& spt = fam(ContinuumId::SymmetricPoschlTeller);
    for (double x : {0.3, 1.0, 2.0, 2.9}) {
        const double cot = std::cos(x) / std::sin(x);
        CHECK(interp_potential_U_s(spt, {{"g", 1.0}}, 0.5, x) == Approx(cot * cot).epsilon(1e-13));
    }

    const auto& ro = fam(ContinuumId::RadialOscillator);
    CHECK(interp_potential_U_s(ro, {{"omega", 1.0}, {"g", 1.0}}, 1.0, 1.0) == Approx(2.0));
    // omega^2 x^2 + g(g+2s-1)/x^2 - omega(1+2g-2s)
    for (double s : {0.1, 0.6}) {
        for (double x : {0.2, 1.7, 6.0}) {
            const double w = 1.4, g = 2.2;
            const double ref = w * w * x * x + g * (g + 2 * s - 1) / (x * x) - w * (1 + 2 * g - 2 * s);
            CHECK(interp_potential_U_s(ro, {{"omega", w}, {"g", g}}, s, x) == Approx(ref).epsilon(1e-13));
        }
    }
}

TEST_CASE("operator interpolation examples") {
    const auto ho = verify_operator_interpolation(fam(ContinuumId::HarmonicOscillator), {{"omega", 1.0}}, 0.7,
                                                  grid(-8.0, 8.0, 1000));
    CHECK(ho.max_abs_residual <= 1e-12 * std::max(1.0, ho.scale));
    CHECK(ho.points == 1000);

    const auto ro = verify_operator_interpolation(fam(ContinuumId::RadialOscillator), {{"omega", 1.0}, {"g", 1.3}},
                                                  0.4, grid(0.05, 12.0, 1000));
    CHECK(ro.relative_residual() <= 1e-9);

    const auto so = verify_operator_interpolation(fam(ContinuumId::Soliton), {{"g", 2.5}}, 0.9, grid(-10.0, 10.0, 1000));
    CHECK(so.relative_residual() <= 1e-9);
    CHECK(so.max_abs_residual >= 0.0);
    CHECK(so.argmax_x() >= -10.0);
    CHECK(so.argmax_x() <= 10.0);

    CHECK_THROWS_AS(verify_operator_interpolation(fam(ContinuumId::Morse), {{"g", 0.2}, {"mu", 1.0}}, 0.5,
                                                  default_grid(fam(ContinuumId::Morse))),
                    BranchError);
}

TEST_CASE("prepotential interpolation examples") {
    const auto& morse = fam(ContinuumId::Morse);
    CHECK(interp_prepotential(morse, {{"g", 2.0}, {"mu", 1.0}}, 0.5, 0.0) == Approx(-1.0));

    const auto& ro = fam(ContinuumId::RadialOscillator);
    CHECK(interp_prepotential(ro, {{"omega", 1.0}, {"g", 1.0}}, 0.25, 2.0) ==
          Approx(0.75 * (-2.0 + std::log(2.0)) + 0.25 * (-2.0 + 2.0 * std::log(2.0))).epsilon(1e-15));
    CHECK(interp_prepotential(ro, {{"omega", 1.0}, {"g", 1.0}}, 0.25, 2.0) == Approx(-2.0 + 1.25 * std::log(2.0)).epsilon(1e-15));

    Rng rng(2);
    for (const auto& f : continuum_catalog()) {
        const auto p = random_parameters(f, rng);
        const double x = f.verification_window.lo + 0.37 * f.verification_window.length();
        CHECK(interp_prepotential(f, p, 0.0, x) == Approx(prepotential(f, p, x)).epsilon(1e-15));
    }

    const auto rm = verify_prepotential_interpolation(fam(ContinuumId::RosenMorse), {{"g", 2.0}, {"mu", 1.0}}, 0.5,
                                                      grid(-8.0, 8.0, 500));
    CHECK(rm.max_abs_residual <= 1e-11);
    const auto spt = verify_prepotential_interpolation(fam(ContinuumId::SymmetricPoschlTeller), {{"g", 1.0}}, 1.0,
                                                       default_grid(fam(ContinuumId::SymmetricPoschlTeller)));
    CHECK(spt.max_abs_residual <= 1e-14);
    const auto co = verify_prepotential_interpolation(fam(ContinuumId::Coulomb), {{"g", 1.0}, {"mu", 1.0}}, 0.3,
                                                      grid(0.1, 20.0, 1000));
    CHECK(co.max_abs_residual <= 1e-11);
}

TEST_CASE("shape invariance examples") {
    const auto spt = verify_shape_invariance(fam(ContinuumId::SymmetricPoschlTeller), {{"g", 1.7}},
                                             default_grid(fam(ContinuumId::SymmetricPoschlTeller)));
    CHECK(spt.relative_residual() <= 1e-10);
    CHECK(spt.s == 1.0);
    const auto morse =
        verify_shape_invariance(fam(ContinuumId::Morse), {{"g", 3.0}, {"mu", 2.0}}, grid(-6.0, 3.0, 1000));
    CHECK(morse.relative_residual() <= 1e-10);
    const auto ho = verify_shape_invariance(fam(ContinuumId::HarmonicOscillator), {{"omega", 1.0}},
                                            default_grid(fam(ContinuumId::HarmonicOscillator)));
    CHECK(ho.max_abs_residual <= 1e-12 * std::max(1.0, ho.scale));
}

TEST_CASE("property: identities over random draws") {
    Rng rng(314);
    for (const auto& f : continuum_catalog()) {
        CAPTURE(f.slug);
        const auto g = default_grid(f);
        for (int draw = 0; draw < 20; ++draw) {
            const auto p = random_parameters(f, rng);
            CAPTURE(p.to_string());
            CHECK(verify_shape_invariance(f, p, g).relative_residual() <= 1e-9);
            for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                CHECK(verify_operator_interpolation(f, p, s, g).relative_residual() <= 1e-9);
                CHECK(verify_prepotential_interpolation(f, p, s, g).max_abs_residual <= 1e-11);
            }
        }
    }
}

TEST_CASE("property: U_s is affine in s with the partner at s = 1") {
    Rng rng(271);
    for (const auto& f : continuum_catalog()) {
        CAPTURE(f.slug);
        for (int draw = 0; draw < 5; ++draw) {
            const auto p = random_parameters(f, rng);
            const double e1 = energy_level(f, p, 1);
            const auto shifted = f.shifted(p);
            for (double x : default_grid(f, 37).points()) {
                const double u0 = interp_potential_U_s(f, p, 0.0, x);
                const double u1 = interp_potential_U_s(f, p, 1.0, x);
                const double scale = std::max({1.0, std::abs(u0), std::abs(u1)});
                CHECK(std::abs(u0 - potential_U(f, p, x)) <= 1e-14 * scale);
                CHECK(std::abs(u1 - (potential_U(f, shifted, x, Validation::Relaxed) + e1)) <= 1e-10 * scale);
                for (double s : {0.3, 0.8}) {
                    CHECK(std::abs(interp_potential_U_s(f, p, s, x) - ((1 - s) * u0 + s * u1)) <= 1e-12 * scale);
                }
            }
        }
    }
}

TEST_CASE("finite-difference spectra of H_s match E_n(lambda') + dE") {
    Rng rng(99);
    for (const auto& f : continuum_catalog()) {
        CAPTURE(f.slug);
        const auto p = random_parameters(f, rng);
        for (double s : {0.0, 0.5, 1.0}) {
            const auto map = coupling_map(f, p, s);
            const int k = std::min(3, f.bound_state_count(map.lambda_prime).value_or(3));
            const auto op = discretize([&](double x) { return interp_potential_U_s(f, p, s, x); },
                                       Grid1D(f.eigen_window.lo, f.eigen_window.hi, 2000));
            const auto ev = eigen_lowest(op, k);
            for (int n = 0; n < k; ++n) {
                const double exact = energy_level(f, map.lambda_prime, n, Validation::Relaxed) + map.delta_E;
                CHECK(std::abs(ev[n] - exact) <= 5e-3 * std::max(1.0, std::abs(exact)));
            }
        }
    }
}
