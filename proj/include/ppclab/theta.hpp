#pragma once

#include <cstddef>

#include "ppclab/points.hpp"
#include "ppclab/verification.hpp"

namespace ppclab {

struct ThetaParams {
    double t;                      // heat time, > 0
    double eval_tolerance = 1e-14; // absolute truncation target
};

// Parameter bundle for the local-regularity chain at level delta.
struct Theorem1Params {
    Theorem1Params(double delta, std::size_t n);

    double delta;
    std::size_t n;

    double s_max() const;        // (8/delta) * sqrt(log n)
    std::size_t k_window() const; // floor(delta^{3/2} * n)
    double heat_time() const;    // (delta * n)^{-2}
};

// theta_t(x) = sum_{k in Z} e^{-4 pi^2 k^2 t} e^{2 pi i k x}. Dispatches at
// 4 pi^2 t = 1 between the Fourier series and the Gaussian image sum; the
// two single-branch evaluators are exposed so agreement can be tested.
double theta(const ThetaParams& params, double x);
double theta(double t, double x);
double theta_fourier(double t, double x, double tol = 1e-14);
double theta_image(double t, double x, double tol = 1e-14);

/// sum_{m,n} theta_t(x_m - x_n), diagonal included.
double theta_pair_sum(const PointSet& p, double t);

// Windowed energy (k = 0 included) dominated by the heat-smoothed pair sum:
//   sum_{|k| <= delta^{3/2} N} |S_k|^2  <=  e^{4 pi^2 delta} * theta_pair_sum.
// Holds unconditionally; an empty window reports vacuous.
VerificationRecord smoothing_domination_check(const PointSet& p, const Theorem1Params& params);

// Off-diagonal pair sum bounded via the rearrangement lemma, applicable only
// when the pair-correlation hypothesis holds at level delta:
//   sum_{m != n} theta_t(x_m - x_n)
//     <= theta_t(0)(1+delta)2N + (1+delta)2N^2 int_{1/N}^{s_max/N} theta_t
//        + theta_t(s_max/N) N^2.
VerificationRecord rearrangement_bound(const PointSet& p, const Theorem1Params& params);

/// Checks int_{1/N}^{s_max/N} theta_t <= 1/2 (informational; a step the
/// asymptotic argument takes for granted).
VerificationRecord theta_window_halfmass_check(const Theorem1Params& params);

} // namespace ppclab
