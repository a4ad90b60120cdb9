#pragma once

// Reproducible random draws of valid coupling constants for property sweeps.

#include <cstdint>
#include <random>

#include "susy/continuum_families.hpp"
#include "susy/discrete_families.hpp"

namespace susy {

/// mt19937_64 with a portable uniform mapping (53 random mantissa bits), so
/// draws are bit-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 engine_;
};

/// lambda valid for the family, with lambda + delta valid as well and every
/// coupling-map precondition satisfied for all s in [0, 1].
ParameterVector random_parameters(const ContinuumFamily& family, Rng& rng);

/// lambda valid for the family (and q, for Askey-Wilson).
ParameterVector random_parameters(const DiscreteFamily& family, Rng& rng, double q = kDefaultQ);

}  // namespace susy
