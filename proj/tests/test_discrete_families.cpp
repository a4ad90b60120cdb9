#include <doctest.h>

#include "oracles.hpp"
#include "susy/discrete_families.hpp"
#include "susy/errors.hpp"
#include "susy/sampling.hpp"

using namespace susy;
using doctest::Approx;

namespace {

const DiscreteFamily& fam(DiscreteId id) { return discrete_family(id); }
constexpr cplx I{0.0, 1.0};
constexpr double q = 0.5;

std::vector<cplx> values(const ParameterVector& p) {
    std::vector<cplx> v;
    for (const auto& e : p) v.emplace_back(e.value, 0.0);
    return v;
}

// Potential functions written out by hand.
cplx V_ref(DiscreteId id, const std::vector<cplx>& a, cplx x) {
    switch (id) {
        case DiscreteId::MeixnerPollaczek:
            return a[0] + I * x;
        case DiscreteId::ContinuousHahn:
            return (a[0] + I * x) * (a[1] + I * x);
        case DiscreteId::ContinuousDualHahn:
            return (a[0] + I * x) * (a[1] + I * x) * (a[2] + I * x) / (2.0 * I * x * (2.0 * I * x + 1.0));
        case DiscreteId::Wilson:
            return (a[0] + I * x) * (a[1] + I * x) * (a[2] + I * x) * (a[3] + I * x) /
                   (2.0 * I * x * (2.0 * I * x + 1.0));
        case DiscreteId::AskeyWilson: {
            const cplx z = x;
            return (1.0 - a[0] * z) * (1.0 - a[1] * z) * (1.0 - a[2] * z) * (1.0 - a[3] * z) /
                   ((1.0 - z * z) * (1.0 - q * z * z));
        }
    }
    return NAN;
}

// Coefficient conjugate: i -> -i for the x families, z -> 1/z for Askey-Wilson.
cplx Vstar_ref(DiscreteId id, const std::vector<cplx>& a, cplx x) {
    std::vector<cplx> ac;
    for (const cplx& v : a) ac.push_back(std::conj(v));
    if (id == DiscreteId::AskeyWilson) return V_ref(id, ac, 1.0 / x);
    // Replacing i by -i equals conj(V(conj x)) when parameters are conjugated back.
    return std::conj(V_ref(id, a, std::conj(x)));
}

std::vector<cplx> shifted_ref(DiscreteId id, const std::vector<cplx>& a) {
    std::vector<cplx> out;
    for (const cplx& v : a) out.push_back(id == DiscreteId::AskeyWilson ? std::sqrt(q) * v : v + 0.5);
    return out;
}

cplx Vs_ref(DiscreteId id, const std::vector<cplx>& a, double s, cplx x) {
    const double scale = id == DiscreteId::AskeyWilson ? 1.0 / q : 1.0;
    return (1.0 - s) * V_ref(id, a, x) + s * scale * V_ref(id, shifted_ref(id, a), x);
}
cplx Vs_star_ref(DiscreteId id, const std::vector<cplx>& a, double s, cplx x) {
    const double scale = id == DiscreteId::AskeyWilson ? 1.0 / q : 1.0;
    return (1.0 - s) * Vstar_ref(id, a, x) + s * scale * Vstar_ref(id, shifted_ref(id, a), x);
}

cplx eta_ref(DiscreteId id, cplx x) {
    switch (id) {
        case DiscreteId::MeixnerPollaczek:
        case DiscreteId::ContinuousHahn:
            return x;
        case DiscreteId::ContinuousDualHahn:
        case DiscreteId::Wilson:
            return x * x;
        case DiscreteId::AskeyWilson:
            return (x + 1.0 / x) / 2.0;
    }
    return NAN;
}

double E_ref(DiscreteId id, const std::vector<cplx>& a, int n) {
    switch (id) {
        case DiscreteId::MeixnerPollaczek:
            return 2.0 * n;
        case DiscreteId::ContinuousHahn:
            return n * (n + 2.0 * a[0].real() + 2.0 * a[1].real() - 1.0);
        case DiscreteId::ContinuousDualHahn:
            return n;
        case DiscreteId::Wilson:
            return n * (n + (a[0] + a[1] + a[2] + a[3]).real() - 1.0);
        case DiscreteId::AskeyWilson:
            return (std::pow(q, -n) - 1.0) * (1.0 - (a[0] * a[1] * a[2] * a[3]).real() * std::pow(q, n - 1));
    }
    return NAN;
}

// Pointwise action of the interpolated similarity-transformed Hamiltonian on eta^k.
cplx htilde_ref(DiscreteId id, const std::vector<cplx>& a, double s, int k, cplx x) {
    auto f = [&](cplx y) { return std::pow(eta_ref(id, y), k); };
    cplx down, up;
    if (id == DiscreteId::AskeyWilson) {
        down = f(q * x);
        up = f(x / q);
    } else {
        down = f(x - I);
        up = f(x + I);
    }
    return Vs_ref(id, a, s, x) * (down - f(x)) + Vs_star_ref(id, a, s, x) * (up - f(x)) +
           s * E_ref(id, a, 1) * f(x);
}

// Targets e_1..e_m of lambda' from expanding alpha * numerator(lambda') = numerator of V_s.
std::vector<cplx> targets_ref(DiscreteId id, const std::vector<cplx>& a, double s, double* alpha) {
    const std::size_t m = a.size();
    const auto e0 = oracle::expand_roots(a);  // prod (t - a_i), ascending
    std::vector<cplx> e(m + 1);
    for (std::size_t k = 0; k <= m; ++k) e[k] = (k % 2 ? -1.0 : 1.0) * e0[m - k];
    std::vector<cplx> out;
    if (id == DiscreteId::AskeyWilson) {
        // prod (1 - a_i z) = sum_k (-1)^k e_k z^k; q^{-1} prod (1 - q^{1/2} a_i z) scales e_k by q^{k/2 - 1}
        *alpha = 1.0 - s + s / q;
        for (std::size_t k = 1; k <= m; ++k) {
            out.push_back(e[k] * ((1.0 - s) + s * std::pow(q, 0.5 * k - 1.0)) / *alpha);
        }
        return out;
    }
    // prod (a_i + y): coefficient of y^{m-k} is e_k; shifting every a_i by 1/2 mixes lower e_j.
    *alpha = 1.0;
    const auto shifted = oracle::expand_roots(shifted_ref(id, a));
    for (std::size_t k = 1; k <= m; ++k) {
        const cplx ek_shift = (k % 2 ? -1.0 : 1.0) * shifted[m - k];
        out.push_back((1.0 - s) * e[k] + s * ek_shift);
    }
    return out;
}

ParameterVector named(const DiscreteFamily& f, std::initializer_list<double> v) {
    ParameterVector p;
    std::size_t i = 0;
    for (double x : v) p.set(f.parameter_names.at(i++), x);
    return p;
}

}  // namespace

TEST_CASE("catalog data") {
    REQUIRE(discrete_catalog().size() == 5);
    const std::size_t counts[] = {1, 2, 3, 4, 4};
    for (std::size_t i = 0; i < 5; ++i) CHECK(discrete_catalog()[i].parameter_count() == counts[i]);
    CHECK(fam(DiscreteId::Wilson).delta == std::vector<double>(4, 0.5));
    CHECK(fam(DiscreteId::AskeyWilson).uses_q());
    CHECK(fam(DiscreteId::ContinuousDualHahn).eta(cplx(3.0, 0.0)) == Approx(9.0));
    CHECK(fam(DiscreteId::AskeyWilson).eta(std::polar(1.0, 0.4)) == Approx(std::cos(0.4)));
    CHECK(find_discrete_family("wilson") == &fam(DiscreteId::Wilson));
    CHECK(find_discrete_family("aw") == &fam(DiscreteId::AskeyWilson));
}

TEST_CASE("parameter validation") {
    const auto& aw = fam(DiscreteId::AskeyWilson);
    CHECK_NOTHROW(aw.validate(named(aw, {0.3, 0.2, 0.1, 0.1}), 0.5));
    CHECK_THROWS_AS(aw.validate(named(aw, {0.9, 0.9, 0.9, 0.9}), 0.5), ParameterError);
    CHECK_THROWS_AS(aw.validate(named(aw, {1.0, 0.1, 0.1, 0.1}), 0.5), ParameterError);
    CHECK_THROWS_AS(aw.validate(named(aw, {0.1, 0.1, 0.1, 0.1}), 1.0), ParameterError);
    CHECK_THROWS_AS(fam(DiscreteId::Wilson).validate(named(fam(DiscreteId::Wilson), {1.0, 1.0, 0.0, 1.0})),
                    ParameterError);
    CHECK_THROWS_AS(fam(DiscreteId::MeixnerPollaczek).validate({{"a", 1.0}}), ParameterError);
}

TEST_CASE("potential value examples") {
    const auto& mp = fam(DiscreteId::MeixnerPollaczek);
    CHECK(std::abs(potential_value(mp, {{"lambda", 1.0}}, 0.0) - 1.0) < 1e-15);
    const auto& ch = fam(DiscreteId::ContinuousHahn);
    CHECK(std::abs(potential_value(ch, named(ch, {1.0, 2.0}), 1.0) - cplx(1.0, 3.0)) < 1e-14);
    const auto& aw = fam(DiscreteId::AskeyWilson);
    for (cplx z : {cplx(0.3, 0.2), std::polar(1.0, 0.7), cplx(2.0, -1.0)}) {
        const cplx ref = 1.0 / ((1.0 - z * z) * (1.0 - q * z * z));
        CHECK(std::abs(potential_value(aw, named(aw, {0.0, 0.0, 0.0, 0.0}), z, q) - ref) < 1e-14 * std::abs(ref));
    }
    CHECK_THROWS_AS(potential_value(fam(DiscreteId::ContinuousDualHahn),
                                    named(fam(DiscreteId::ContinuousDualHahn), {1.0, 1.0, 1.0}), 0.0),
                    PoleError);
    CHECK_THROWS_AS(potential_value(aw, named(aw, {0.1, 0.1, 0.1, 0.1}), cplx(1.0, 1e-10), q), PoleError);
}

TEST_CASE("property: potentials match hand-written formulas") {
    Rng rng(8);
    for (const auto& f : discrete_catalog()) {
        CAPTURE(f.slug);
        for (int draw = 0; draw < 10; ++draw) {
            const auto p = random_parameters(f, rng, q);
            const auto a = values(p);
            for (const cplx& x : default_sample_points(f)) {
                const cplx v = V_ref(f.id, a, x);
                CHECK(std::abs(potential_value(f, p, x, q) - v) <= 1e-12 * std::max(1.0, std::abs(v)));
                const cplx vs = Vstar_ref(f.id, a, x);
                CHECK(std::abs(conjugate_potential_value(f, p, x, q) - vs) <= 1e-12 * std::max(1.0, std::abs(vs)));
                for (double s : {0.0, 0.35, 1.0}) {
                    const cplx w = Vs_ref(f.id, a, s, x);
                    CHECK(std::abs(interp_potential_value(f, p, s, x, q) - w) <= 1e-12 * std::max(1.0, std::abs(w)));
                    const cplx ws = Vs_star_ref(f.id, a, s, x);
                    CHECK(std::abs(interp_conjugate_potential_value(f, p, s, x, q) - ws) <=
                          1e-12 * std::max(1.0, std::abs(ws)));
                }
            }
        }
    }
}

TEST_CASE("conjugate potential is pointwise conjugation on the physical line") {
    Rng rng(9);
    for (const auto& f : discrete_catalog()) {
        const auto p = random_parameters(f, rng, q);
        for (double t : {0.4, 1.3, 2.2}) {
            const cplx x = f.id == DiscreteId::AskeyWilson ? std::polar(1.0, t) : cplx(t, 0.0);
            const cplx v = potential_value(f, p, x, q);
            CHECK(std::abs(conjugate_potential_value(f, p, x, q) - std::conj(v)) <= 1e-13 * std::max(1.0, std::abs(v)));
        }
    }
}

TEST_CASE("interpolated potential examples") {
    const auto& mp = fam(DiscreteId::MeixnerPollaczek);
    CHECK(std::abs(interp_potential_value(mp, {{"lambda", 1.0}}, 0.5, 2.0) - cplx(1.25, 2.0)) < 1e-15);
    Rng rng(10);
    for (const auto& f : discrete_catalog()) {
        const auto p = random_parameters(f, rng, q);
        for (const cplx& x : default_sample_points(f, 7)) {
            const cplx v0 = interp_potential_value(f, p, 0.0, x, q);
            const cplx v1 = interp_potential_value(f, p, 1.0, x, q);
            CHECK(std::abs(v0 - potential_value(f, p, x, q)) < 1e-15 * std::max(1.0, std::abs(v0)));
            CHECK(std::abs(interp_potential_value(f, p, 0.5, x, q) - 0.5 * (v0 + v1)) <=
                  1e-14 * std::max(1.0, std::abs(v0) + std::abs(v1)));
        }
    }
    const auto& aw = fam(DiscreteId::AskeyWilson);
    const auto p = named(aw, {0.3, 0.2, 0.1, 0.1});
    ParameterVector scaled;
    for (const auto& e : p) scaled.set(e.name, std::sqrt(q) * e.value);
    const cplx z = std::polar(1.0, 1.1);
    CHECK(std::abs(interp_potential_value(aw, p, 1.0, z, q) - potential_value(aw, scaled, z, q) / q) < 1e-14);
}

TEST_CASE("shift solver examples") {
    const auto& ch = fam(DiscreteId::ContinuousHahn);
    const auto r = solve_shifted_parameters(ch, named(ch, {1.0, 1.0}), 0.5);
    const auto [r1, r2] = oracle::quadratic_roots(-2.5, 1.625);
    CHECK(oracle::multiset_gap(r.lambda_prime, {r1, r2}) < 1e-14);
    CHECK(std::abs(r.lambda_prime[0] - cplx(1.25, 0.25)) < 1e-14);  // canonical order: larger imaginary part first
    CHECK(r.delta_E_tilde == Approx(2.0));
    CHECK(r.alpha == 1.0);
    CHECK_FALSE(r.boundary_matched.has_value());

    const auto& w = fam(DiscreteId::Wilson);
    const auto rw = solve_shifted_parameters(w, named(w, {0.7, 1.9, 2.4, 0.3}), 1.0);
    CHECK(oracle::multiset_gap(rw.lambda_prime, {1.2, 2.4, 2.9, 0.8}) < 1e-10);
    CHECK(rw.boundary_matched == true);

    const auto& aw = fam(DiscreteId::AskeyWilson);
    const auto ra = solve_shifted_parameters(aw, named(aw, {0.3, 0.2, -0.1, 0.4}), 1.0, 0.5);
    CHECK(ra.alpha == Approx(2.0));
    const double h = std::sqrt(0.5);
    CHECK(oracle::multiset_gap(ra.lambda_prime, {0.3 * h, 0.2 * h, -0.1 * h, 0.4 * h}) < 1e-10);
    CHECK(ra.boundary_matched == true);
}

TEST_CASE("property: shift targets agree with the expanded numerator") {
    Rng rng(12);
    for (const auto& f : discrete_catalog()) {
        CAPTURE(f.slug);
        for (int draw = 0; draw < 20; ++draw) {
            const auto p = random_parameters(f, rng, q);
            for (int j = 0; j <= 20; ++j) {
                const double s = j / 20.0;
                double alpha_ref = 0.0;
                const auto ref = targets_ref(f.id, values(p), s, &alpha_ref);
                const auto r = solve_shifted_parameters(f, p, s, q);
                CHECK(r.alpha == Approx(alpha_ref).epsilon(1e-14));
                const auto e = elementary_symmetric(r.lambda_prime);
                for (std::size_t k = 0; k < ref.size(); ++k) {
                    CHECK(std::abs(r.targets[k] - ref[k].real()) <= 1e-13 * std::max(1.0, std::abs(ref[k])));
                    CHECK(std::abs(e[k + 1] - ref[k]) <= 1e-9 * std::max(1.0, std::abs(ref[k])));
                }
                CHECK(r.max_defect <= 1e-9);
            }
        }
    }
}

TEST_CASE("property: boundary solutions and conjugation closure") {
    Rng rng(13);
    for (const auto& f : discrete_catalog()) {
        CAPTURE(f.slug);
        for (int draw = 0; draw < 20; ++draw) {
            const auto p = random_parameters(f, rng, q);
            const auto r0 = solve_shifted_parameters(f, p, 0.0, q);
            const auto r1 = solve_shifted_parameters(f, p, 1.0, q);
            CHECK(oracle::multiset_gap(r0.lambda_prime, values(p)) <= 1e-10);
            CHECK(oracle::multiset_gap(r1.lambda_prime, shifted_ref(f.id, values(p))) <= 1e-10);
            CHECK(r0.boundary_matched == true);
            CHECK(r1.boundary_matched == true);
            CHECK(multiset_distance(r1.lambda_prime, shifted_parameters(f, p, q)) <= 1e-10);
            for (double s : {0.2, 0.5, 0.9}) {
                const auto r = solve_shifted_parameters(f, p, s, q);
                std::vector<cplx> conj;
                for (const cplx& z : r.lambda_prime) conj.push_back(std::conj(z));
                CHECK(multiset_distance(r.lambda_prime, conj) <= 1e-9);
            }
        }
    }
}

TEST_CASE("multiset distance ignores order") {
    const std::vector<cplx> a{1.0, 2.0, cplx(0.0, 1.0)};
    const std::vector<cplx> b{cplx(0.0, 1.0), 1.0, 2.0};
    CHECK(multiset_distance(a, b) == 0.0);
    // Distances are relative to max(1, |z|).
    CHECK(multiset_distance(a, std::vector<cplx>{1.0, 2.0, 3.0}) == Approx(std::abs(cplx(3.0, -1.0)) / 3.0));
}

TEST_CASE("potential identity examples") {
    const auto& mp = fam(DiscreteId::MeixnerPollaczek);
    CHECK(verify_potential_identity(mp, {{"lambda", 2.0}}, 0.3, default_sample_points(mp)).max_abs_residual <= 1e-12);

    const auto& cd = fam(DiscreteId::ContinuousDualHahn);
    std::vector<cplx> pts;
    for (int j = 0; j < 50; ++j) pts.emplace_back(0.1 + 9.9 * (j + 0.5) / 50.0, 0.0);
    CHECK(verify_potential_identity(cd, named(cd, {1.0, 1.0, 1.0}), 0.5, pts).relative_residual() <= 1e-10);

    const auto& aw = fam(DiscreteId::AskeyWilson);
    const auto rep = verify_potential_identity(aw, named(aw, {0.3, 0.2, 0.1, 0.1}), 0.5, default_sample_points(aw), q);
    CHECK(rep.relative_residual() <= 1e-9);
    CHECK(rep.points == 50);
}

TEST_CASE("property: potential identity on a 21-point s-grid") {
    Rng rng(14);
    for (const auto& f : discrete_catalog()) {
        CAPTURE(f.slug);
        const auto pts = default_sample_points(f);
        for (int draw = 0; draw < 20; ++draw) {
            const auto p = random_parameters(f, rng, q);
            for (int j = 0; j <= 20; ++j) {
                CHECK(verify_potential_identity(f, p, j / 20.0, pts, q).relative_residual() <= 1e-9);
            }
        }
    }
}

TEST_CASE("discrete spectra") {
    const auto& cd = fam(DiscreteId::ContinuousDualHahn);
    CHECK(spectrum(cd, named(cd, {0.4, 1.1, 2.0}), 7) == 7.0);
    Rng rng(15);
    for (const auto& f : discrete_catalog()) {
        const auto p = random_parameters(f, rng, q);
        CHECK(spectrum(f, p, 0, q) == 0.0);
        for (int n = 1; n < 6; ++n) {
            CHECK(spectrum(f, p, n, q) == Approx(E_ref(f.id, values(p), n)).epsilon(1e-13));
            CHECK(std::abs(energy_level(f, values(p), n, q) - E_ref(f.id, values(p), n)) <=
                  1e-12 * std::max(1.0, std::abs(E_ref(f.id, values(p), n))));
        }
    }
    const auto& aw = fam(DiscreteId::AskeyWilson);
    const double r = std::pow(0.01, 0.25);
    CHECK(spectrum(aw, named(aw, {r, r, r, r}), 1, 0.5) == Approx(0.99).epsilon(1e-14));
}

TEST_CASE("H~ matrix examples") {
    const auto& mp = fam(DiscreteId::MeixnerPollaczek);
    const auto m = build_htilde_matrix(mp, {{"lambda", 1.0}}, 0.0, 1);
    REQUIRE(m.rows() == 2);
    CHECK(std::abs(m(0, 0)) < 1e-12);
    CHECK(std::abs(m(1, 0)) < 1e-12);
    CHECK(std::abs(m(0, 1)) < 1e-12);
    CHECK(std::abs(m(1, 1) - 2.0) < 1e-12);

    const auto& w = fam(DiscreteId::Wilson);
    const auto mw = build_htilde_matrix(w, named(w, {1.0, 1.0, 1.0, 1.0}), 0.0, 3);
    const double diag[] = {0.0, 4.0, 10.0, 18.0};
    for (int n = 0; n < 4; ++n) {
        CHECK(std::abs(mw(n, n) - diag[n]) < 1e-9);
        CHECK(std::abs(mw(n, 0)) < 1e-9);
    }
}

TEST_CASE("property: H~ matrix columns reproduce the pointwise action") {
    Rng rng(16);
    for (const auto& f : discrete_catalog()) {
        CAPTURE(f.slug);
        for (int draw = 0; draw < 3; ++draw) {
            const auto p = random_parameters(f, rng, q);
            const auto a = values(p);
            for (double s : {0.0, 0.4, 1.0}) {
                const int N = 6;
                const auto m = build_htilde_matrix(f, p, s, N, q);
                for (int k = 0; k <= N; ++k) {
                    for (cplx x : {cplx(0.83, 0.21), cplx(1.37, -0.12), cplx(0.55, 0.6)}) {
                        if (f.id == DiscreteId::AskeyWilson) x = std::polar(1.1, std::arg(x));
                        const cplx ref = htilde_ref(f.id, a, s, k, x);
                        cplx got = 0.0;
                        for (int j = 0; j <= N; ++j) got += m(j, k) * std::pow(eta_ref(f.id, x), j);
                        CHECK(std::abs(got - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
                    }
                }
            }
        }
    }
}

TEST_CASE("interpolated spectrum examples") {
    const auto& mp = fam(DiscreteId::MeixnerPollaczek);
    const auto c = verify_interpolated_spectrum(mp, {{"lambda", 1.0}}, 0.5, 5);
    for (int n = 0; n <= 5; ++n) CHECK(std::abs(c.computed[n] - (2.0 * n + 1.0)) < 1e-9);

    const auto& cd = fam(DiscreteId::ContinuousDualHahn);
    const auto c2 = verify_interpolated_spectrum(cd, named(cd, {1.0, 1.0, 1.0}), 1.0, 4);
    for (int n = 0; n <= 4; ++n) CHECK(std::abs(c2.computed[n] - (n + 1.0)) < 1e-9);

    Rng rng(18);
    for (const auto& f : discrete_catalog()) {
        const auto p = random_parameters(f, rng, q);
        const auto c0 = verify_interpolated_spectrum(f, p, 0.0, 6, q);
        for (int n = 0; n <= 6; ++n) {
            const double e = E_ref(f.id, values(p), n);
            CHECK(std::abs(c0.computed[n] - e) <= 1e-8 * (1.0 + std::abs(E_ref(f.id, values(p), 6))));
        }
    }
}

TEST_CASE("property: N = 10 matrices are degree-triangular with the predicted diagonal") {
    Rng rng(19);
    for (const auto& f : discrete_catalog()) {
        CAPTURE(f.slug);
        for (int draw = 0; draw < 5; ++draw) {
            const auto p = random_parameters(f, rng, q);
            for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const auto c = verify_interpolated_spectrum(f, p, s, 10, q);
                CHECK(c.triangular_defect <= 1e-8);
                double alpha = 0.0;
                targets_ref(f.id, values(p), s, &alpha);
                const auto lp = solve_shifted_parameters(f, p, s, q).lambda_prime;
                const double scale = 1.0 + std::abs(c.expected.back());
                for (int n = 0; n <= 10; ++n) {
                    // E_n(lambda') through the hand-written formula (lambda' may be complex).
                    cplx en;
                    if (f.id == DiscreteId::AskeyWilson) {
                        en = (std::pow(q, -n) - 1.0) * (1.0 - lp[0] * lp[1] * lp[2] * lp[3] * std::pow(q, n - 1));
                    } else if (f.id == DiscreteId::Wilson) {
                        en = double(n) * (double(n) + lp[0] + lp[1] + lp[2] + lp[3] - 1.0);
                    } else if (f.id == DiscreteId::ContinuousHahn) {
                        en = double(n) * (double(n) + 2.0 * lp[0] + 2.0 * lp[1] - 1.0);
                    } else {
                        en = E_ref(f.id, {}, n);
                    }
                    const cplx expect = alpha * en + s * E_ref(f.id, values(p), 1);
                    CHECK(std::abs(c.computed[n] - expect) <= 1e-8 * scale);
                }
            }
        }
    }
}
