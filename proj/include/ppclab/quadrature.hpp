#pragma once

#include <cstddef>
#include <functional>

namespace ppclab {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // conservative bound from |K15 - G7| over all segments
    std::size_t evaluations = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (G7,K15): globally refines the segment with the
// largest error estimate until total error <= max(abs_tol, rel_tol*|value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-10, double abs_tol = 0.0,
                                    std::size_t max_segments = 4096);

/// Same, but throws numerical_error if the tolerance is not reached.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 0.0,
                 std::size_t max_segments = 4096);

} // namespace ppclab
