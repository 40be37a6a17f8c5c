#pragma once

#include <cstddef>

#include "ppclab/points.hpp"

namespace ppclab {

enum class DiscrepancyMethod { ExtremeExact, StarExact, StarBracket };

// Arc from a forward (counter-clockwise) to b, possibly wrapping; length is
// frac(b - a), and a == b with closed endpoints denotes the one-point arc.
// closed == false marks a witness whose supremum is attained only as the
// limit of open arcs, endpoints excluded.
struct ArcWitness {
    double a = 0.0;
    double b = 0.0;
    bool closed = true;
};

struct DiscrepancyResult {
    double value = 0.0;
    ArcWitness witness;
    DiscrepancyMethod method = DiscrepancyMethod::ExtremeExact;
};

// Exact supremum of |count/N - length| over all torus arcs (wrap-around
// included), computed from cyclic windows of consecutive sorted points.
DiscrepancyResult extreme_discrepancy(const PointSet& p);

/// Exact supremum over anchored intervals [0, a).
DiscrepancyResult star_discrepancy(const PointSet& p);

struct CasselsReport {
    double d_n = 0.0;                // extreme discrepancy of p
    double diff_lower = 0.0;         // discrepancy bracket for the difference set
    double diff_upper = 0.0;
    bool diff_exact = false;
    double ratio_lower = 0.0;        // D_N / (sqrt(D') (1 + |log D'|)) over bracket
    double ratio_upper = 0.0;
};

// Compares D_N against the discrepancy D' of the N^2-point difference set.
// The exact extreme scan on the difference set is O(N^4) and only runs for
// N <= exact_cap; above that the rigorous bracket [star, 2*star] is used.
CasselsReport cassels_report(const PointSet& p, std::size_t exact_cap = 128);

} // namespace ppclab
