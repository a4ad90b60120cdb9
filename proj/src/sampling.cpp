#include "susy/sampling.hpp"

namespace susy {

ParameterVector random_parameters(const ContinuumFamily& family, Rng& rng) {
    switch (family.id) {
        case ContinuumId::HarmonicOscillator:
            return {{"omega", rng.uniform(0.2, 3.0)}};
        case ContinuumId::RadialOscillator: {
            const double omega = rng.uniform(0.2, 3.0);
            return {{"omega", omega}, {"g", rng.uniform(0.5, 4.0)}};
        }
        case ContinuumId::SymmetricPoschlTeller:
            return {{"g", rng.uniform(0.5, 4.0)}};
        case ContinuumId::Soliton:
            return {{"g", rng.uniform(1.05, 5.0)}};
        case ContinuumId::Morse:
        case ContinuumId::HyperbolicSymmetricTop: {
            const double g = rng.uniform(1.05, 5.0);
            return {{"g", g}, {"mu", rng.uniform(0.1, 2.0)}};
        }
        case ContinuumId::PoschlTeller: {
            const double g = rng.uniform(0.5, 4.0);
            return {{"g", g}, {"h", rng.uniform(0.5, 4.0)}};
        }
        case ContinuumId::RosenMorse: {
            // |mu| < (g-1)^2 keeps lambda + delta = (g-1, mu) valid.
            const double g = rng.uniform(1.5, 5.0);
            const double bound = 0.9 * (g - 1.0) * (g - 1.0);
            return {{"g", g}, {"mu", rng.uniform(-bound, bound)}};
        }
        case ContinuumId::Coulomb: {
            const double g = rng.uniform(0.5, 4.0);
            return {{"g", g}, {"mu", rng.uniform(0.1, 3.0)}};
        }
    }
    return {};
}

ParameterVector random_parameters(const DiscreteFamily& family, Rng& rng, double q) {
    std::vector<Parameter> entries;
    if (family.id == DiscreteId::AskeyWilson) {
        for (;;) {
            entries.clear();
            double product = 1.0;
            for (const auto& name : family.parameter_names) {
                const double v = rng.uniform(-0.9, 0.9);
                product *= v;
                entries.push_back({name, v});
            }
            if (product < q) break;
        }
        return ParameterVector(std::move(entries));
    }
    for (const auto& name : family.parameter_names) entries.push_back({name, rng.uniform(0.1, 3.0)});
    return ParameterVector(std::move(entries));
}

}  // namespace susy
