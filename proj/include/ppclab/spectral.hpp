#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ppclab/points.hpp"

namespace ppclab {

// A truncated-series result with rigorous bounds on the omitted mass:
// the true value lies in [estimate - tail_low, estimate + tail_high].
struct BoundedValue {
    double estimate = 0.0;
    double tail_low = 0.0;
    double tail_high = 0.0;

    double lower() const { return estimate - tail_low; }
    double upper() const { return estimate + tail_high; }
    double width() const { return tail_low + tail_high; }
    bool contains(double v) const { return lower() <= v && v <= upper(); }
};

// Exponential sums S_k = sum_n e^{2 pi i k x_n} for k = 1..K.
struct SpectralProfile {
    std::size_t n = 0;                      // point count N
    std::vector<std::complex<double>> sums; // sums[k-1] = S_k

    std::size_t max_freq() const { return sums.size(); }
    const std::complex<double>& at(std::size_t k) const; // 1-based
};

std::complex<double> exp_sum(const PointSet& p, std::int64_t k);
SpectralProfile build_profile(const PointSet& p, std::size_t max_freq);

/// sum over 0 < |k| <= k_window of |S_k|^2 (conjugate symmetry doubles k >= 1).
double energy_window(const SpectralProfile& prof, std::size_t k_window);

/// sum_{k=1..K} |S_k|^power / k^2 with tail_high = N^power / K, power in {2,4}.
BoundedValue weighted_energy(const SpectralProfile& prof, int power);

enum class DiaphonyNorm { Classical, Unnormalized };

// Classical: F_N = (2/N^2 sum_k |S_k|^2/k^2)^{1/2}; Unnormalized drops 1/N^2.
BoundedValue diaphony(const SpectralProfile& prof, DiaphonyNorm norm);

/// Exact O(N^2) pairwise closed form of the classical diaphony.
double diaphony_closed(const PointSet& p);

/// LeVeque: D_N <= (6/pi^2 * (1/N^2) * sum_k |S_k|^2/k^2)^{1/3}; upper() is rigorous.
BoundedValue leveque_bound(const SpectralProfile& prof);

struct ErdosTuranBound {
    double bound;        // min_K [N/(K+1) + 3 sum_{k<=K} |S_k|/k] / N
    std::size_t k_star;  // minimizing K (smallest on ties); == max_freq when capped
};
ErdosTuranBound erdos_turan_bound(const SpectralProfile& prof);

/// log(1/(4 sin^2 pi x)); +inf at integers.
double logsin_kernel(double x);

// (sqrt(log N)/N) * sum_{m,n} min(log N, logsin_kernel(x_m - x_n));
// diagonal terms take the cap. Requires N >= 2.
double logsin_statistic(const PointSet& p);

/// CSV with header: k,re,im,energy (energy = |S_k|^2).
void write_profile_csv(std::ostream& out, const SpectralProfile& prof);

} // namespace ppclab
