#include "ppclab/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ppclab {

DiscrepancyResult extreme_discrepancy(const PointSet& p) {
    const std::size_t n = p.size();
    std::vector<double> x = p.coords();
    std::sort(x.begin(), x.end());

    DiscrepancyResult res;
    res.method = DiscrepancyMethod::ExtremeExact;
    res.value = 0.0;
    res.witness = {x[0], x[0], true};

    const double nd = static_cast<double>(n);
    for (std::size_t m = 1; m <= n; ++m) {
        const double m_over_n = static_cast<double>(m) / nd;
        for (std::size_t i = 0; i < n; ++i) {
            // Shortest closed arc holding the m consecutive points starting
            // at i: its count is at least m, so m/N - span never overstates.
            const std::size_t j = i + m - 1;
            const double hi = j < n ? x[j] : x[j - n] + 1.0;
            const double span = hi - x[i];
            const double over = m_over_n - span;
            if (over > res.value) {
                res.value = over;
                res.witness = {x[i], j < n ? x[j] : x[j - n], true};
            }

            // Widest open arc holding only those m points: from the previous
            // point to the next one, exclusive. Degenerate for tied
            // coordinates or m == n, where the formula only undershoots.
            const std::size_t prev = (i + n - 1) % n;
            const std::size_t next = (i + m) % n;
            const double gap = frac(x[next] - x[prev]);
            const double under = gap - m_over_n;
            if (under > res.value) {
                res.value = under;
                res.witness = {x[prev], x[next], false};
            }
        }
    }
    return res;
}

DiscrepancyResult star_discrepancy(const PointSet& p) {
    const std::size_t n = p.size();
    std::vector<double> x = p.coords();
    std::sort(x.begin(), x.end());

    DiscrepancyResult res;
    res.method = DiscrepancyMethod::StarExact;
    res.value = 0.0;
    res.witness = {0.0, 0.0, true};

    const double nd = static_cast<double>(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double xi = x[i - 1];
        const double with_point = static_cast<double>(i) / nd - xi;   // [0, x_(i)]
        const double without_point = xi - static_cast<double>(i - 1) / nd; // [0, x_(i))
        if (with_point > res.value) {
            res.value = with_point;
            res.witness = {0.0, xi, true};
        }
        if (without_point > res.value) {
            res.value = without_point;
            res.witness = {0.0, xi, false};
        }
    }
    return res;
}

namespace {

// sqrt(D) (1 + |log D|); increasing on (0, 1/e], decreasing on [1/e, 1].
double cassels_denominator(double d) {
    return std::sqrt(d) * (1.0 + std::abs(std::log(d)));
}

} // namespace

CasselsReport cassels_report(const PointSet& p, std::size_t exact_cap) {
    CasselsReport rep;
    rep.d_n = extreme_discrepancy(p).value;

    const PointSet diff = difference_set(p);
    if (p.size() <= exact_cap) {
        rep.diff_lower = rep.diff_upper = extreme_discrepancy(diff).value;
        rep.diff_exact = true;
    } else {
        const double star = star_discrepancy(diff).value;
        rep.diff_lower = star;
        rep.diff_upper = std::min(2.0 * star, 1.0);
        rep.diff_exact = false;
    }

    // The denominator is unimodal with its maximum at D' = 1/e, so evaluate
    // both bracket endpoints and the interior peak when it is covered.
    double den_min = std::min(cassels_denominator(rep.diff_lower),
                              cassels_denominator(rep.diff_upper));
    double den_max = std::max(cassels_denominator(rep.diff_lower),
                              cassels_denominator(rep.diff_upper));
    const double peak = std::exp(-1.0);
    if (rep.diff_lower <= peak && peak <= rep.diff_upper) {
        den_max = std::max(den_max, cassels_denominator(peak));
    }
    rep.ratio_lower = rep.d_n / den_max;
    rep.ratio_upper = rep.d_n / den_min;
    return rep;
}

} // namespace ppclab
