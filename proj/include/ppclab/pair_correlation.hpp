#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ppclab/points.hpp"
#include "ppclab/spectral.hpp"
#include "ppclab/verification.hpp"

namespace ppclab {

struct DistanceJump {
    double distance;            // in [0, 1/2]
    std::uint64_t multiplicity; // over ordered pairs, hence even
};

// Sorted pairwise circle distances over ordered pairs (i, j), i != j,
// merged on exact binary64 equality. Multiplicities sum to n(n-1).
struct DistanceMultiset {
    std::size_t n = 0;
    std::vector<DistanceJump> jumps; // strictly increasing distances

    std::uint64_t total() const {
        return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
    }
};

DistanceMultiset distance_multiset(const PointSet& p);

// Right-continuous counting function G(r) = #{(i,j): i != j, dist <= r}.
class PPCCurve {
public:
    explicit PPCCurve(DistanceMultiset dm);
    static PPCCurve from_points(const PointSet& p);

    std::size_t n() const { return n_; }
    std::uint64_t total() const;
    std::uint64_t pair_count(double r) const; // closed threshold
    const std::vector<DistanceJump>& jumps() const { return jumps_; }
    const std::vector<std::uint64_t>& cumulative() const { return cumulative_; }

private:
    std::size_t n_ = 0;
    std::vector<DistanceJump> jumps_;
    std::vector<std::uint64_t> cumulative_; // cumulative_[i] = G(jumps_[i].distance)
};

/// (1/N) #{(m,n): m != n, |x_m - x_n| <= s/N}.
double ppc_statistic(const PPCCurve& curve, double s);

/// (1/N^{2-alpha}) #{...: |x_m - x_n| <= s/N^alpha}, 0 < alpha <= 1.
double ppc_statistic_alpha(const PPCCurve& curve, double s, double alpha);

/// (1/2u) int_{s-u}^{s+u} ppc_statistic(t) dt, exact over the step function.
double window_average(const PPCCurve& curve, double s, double u);

struct HypothesisWitness {
    double s = 0.0;
    double statistic = 0.0;
    double bound = 0.0;
};

struct HypothesisResult {
    bool holds = true;
    bool vacuous = false;
    double s_max = 0.0;
    HypothesisWitness worst; // minimal-slack location, slack = bound - statistic
};

enum class HypothesisGrid { RealJumps, IntegerOnly };

// Checks ppc_statistic(s) <= (1+delta) 2s over 1 <= s <= (8/delta)sqrt(log N).
// The statistic is a nondecreasing step function against an increasing bound,
// so scanning s = 1 plus every jump in (1, s_max] decides the real interval.
HypothesisResult theorem1_hypothesis_check(const PPCCurve& curve, double delta,
                                           HypothesisGrid grid = HypothesisGrid::RealJumps);

// A = 2 int_0^{1/2} (G(t)/N - 2Nt)^2 dt, integrated in closed form piece by
// piece; the only error is binary64 rounding.
double A_direct(const PointSet& p);

/// Fourier coefficient of the symmetric arc indicator: sin(2 k pi s)/(k pi).
double fourier_coeff_indicator(std::int64_t k, double s);

// Spectral form of A truncated at the profile's K, with worst-case tails:
// A = (1/N^2) sum_k (2/pi^2 k^2) |S_k|^4 - (1/N) sum_{k odd} (8/pi^2 k^2) |S_k|^2 + 1.
BoundedValue A_spectral(const SpectralProfile& prof);

// N sum_{k odd} (8/k^2)|S_k|^2 <= sum_{k>=1} (2/k^2)|S_k|^4 + pi^2 N^2,
// with adversarial tail assignment; inconclusive if the enclosures overlap.
VerificationRecord corollary2_check(const SpectralProfile& prof);

// Bounds A by the proof-line expression (2/(pi^2 N^2)) sum |S_k|^4/k^2 + 1
// and reports which difference-set diaphony normalization reproduces it.
VerificationRecord corollary1_check(const PointSet& p, std::size_t max_freq,
                                    std::size_t cap_n = 64);

struct Theorem2Report {
    double a_value = 0.0;
    double d_n = 0.0;
    double r_upper = 0.0;     // A / (N^2 D^2)
    double r_lower = 0.0;     // A / (N^2 D^5)
    bool d_above_cbrt = false; // D_N >= N^{-1/3}
};

/// Diagnostic ratios for the two-sided global bounds (constants unspecified).
Theorem2Report theorem2_report(const PointSet& p);

/// CSV with header: s,statistic,poisson_reference.
void write_ppc_csv(std::ostream& out, const PPCCurve& curve, std::span<const double> s_grid);

} // namespace ppclab
