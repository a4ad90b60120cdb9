#pragma once

#include <complex>
#include <cstddef>
#include <string>

#include "susy/parameters.hpp"

namespace susy {

/// Worst-case mismatch of an identity over a set of sample points.
struct ResidualReport {
    std::string family;
    double s = 0.0;
    Interval window;           // sampled interval (real grids) or bounding box of |point|
    std::size_t points = 0;
    double max_abs_residual = 0.0;
    double scale = 0.0;        // max magnitude of the reference side over the samples
    std::complex<double> argmax{};  // sample where the residual peaks (imag 0 on real grids)

    double argmax_x() const noexcept { return argmax.real(); }
    /// Absolute residual divided by max(1, scale).
    double relative_residual() const noexcept { return max_abs_residual / (scale > 1.0 ? scale : 1.0); }
};

}  // namespace susy
