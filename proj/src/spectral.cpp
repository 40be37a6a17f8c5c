#include "ppclab/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ppclab/detail/kahan.hpp"
#include "ppclab/errors.hpp"

namespace ppclab {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.141592653589793238462643383280;

// One frequency, direct summation over n ascending. The phase k*x is
// reduced mod 1 before the trig call so the argument stays in [0, 2*pi).
std::complex<double> exp_sum_at(const std::vector<double>& xs, double k) {
    double re = 0.0;
    double im = 0.0;
    for (double x : xs) {
        double ph = k * x;
        ph -= std::floor(ph);
        const double a = kTwoPi * ph;
        re += std::cos(a);
        im += std::sin(a);
    }
    return {re, im};
}

} // namespace

const std::complex<double>& SpectralProfile::at(std::size_t k) const {
    if (k < 1 || k > sums.size()) {
        throw insufficient_profile("SpectralProfile: frequency " + std::to_string(k) +
                                   " outside 1.." + std::to_string(sums.size()));
    }
    return sums[k - 1];
}

std::complex<double> exp_sum(const PointSet& p, std::int64_t k) {
    if (k == 0) {
        return {static_cast<double>(p.size()), 0.0};
    }
    return exp_sum_at(p.coords(), static_cast<double>(k));
}

SpectralProfile build_profile(const PointSet& p, std::size_t max_freq) {
    if (max_freq == 0) {
        throw std::invalid_argument("build_profile: max_freq must be >= 1");
    }
    SpectralProfile prof;
    prof.n = p.size();
    prof.sums.resize(max_freq);
    for (std::size_t k = 1; k <= max_freq; ++k) {
        prof.sums[k - 1] = exp_sum_at(p.coords(), static_cast<double>(k));
    }
    return prof;
}

double energy_window(const SpectralProfile& prof, std::size_t k_window) {
    if (k_window == 0) {
        throw std::invalid_argument("energy_window: k_window must be >= 1");
    }
    if (k_window > prof.max_freq()) {
        throw insufficient_profile("energy_window: window " + std::to_string(k_window) +
                                   " exceeds profile truncation " +
                                   std::to_string(prof.max_freq()));
    }
    detail::Kahan acc;
    for (std::size_t k = 1; k <= k_window; ++k) {
        acc.add(std::norm(prof.sums[k - 1]));
    }
    return 2.0 * acc.value();
}

BoundedValue weighted_energy(const SpectralProfile& prof, int power) {
    if (power != 2 && power != 4) {
        throw std::invalid_argument("weighted_energy: power must be 2 or 4");
    }
    const std::size_t big_k = prof.max_freq();
    detail::Kahan acc;
    for (std::size_t k = 1; k <= big_k; ++k) {
        const double e = std::norm(prof.sums[k - 1]); // |S_k|^2
        const double term = (power == 2) ? e : e * e;
        acc.add(term / (static_cast<double>(k) * static_cast<double>(k)));
    }
    const double n = static_cast<double>(prof.n);
    // |S_k| <= N and sum_{k>K} k^{-2} <= 1/K
    const double tail = std::pow(n, power) / static_cast<double>(big_k);
    return {acc.value(), 0.0, tail};
}

BoundedValue diaphony(const SpectralProfile& prof, DiaphonyNorm norm) {
    const BoundedValue we = weighted_energy(prof, 2);
    const double scale = (norm == DiaphonyNorm::Classical)
                             ? 1.0 / (static_cast<double>(prof.n) * static_cast<double>(prof.n))
                             : 1.0;
    const double est = std::sqrt(2.0 * scale * we.estimate);
    const double lo = std::sqrt(2.0 * scale * std::max(0.0, we.lower()));
    const double hi = std::sqrt(2.0 * scale * we.upper());
    return {est, est - lo, hi - est};
}

double diaphony_closed(const PointSet& p) {
    const std::size_t n = p.size();
    detail::Kahan acc;
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t j = 0; j < n; ++j) {
            const double y = frac(p[m] - p[j]);
            const double u = 1.0 - 2.0 * y;
            acc.add(u * u - 1.0 / 3.0);
        }
    }
    const double nd = static_cast<double>(n);
    return std::sqrt(kPi * kPi / (2.0 * nd * nd) * acc.value());
}

BoundedValue leveque_bound(const SpectralProfile& prof) {
    const BoundedValue we = weighted_energy(prof, 2);
    const double n2 = static_cast<double>(prof.n) * static_cast<double>(prof.n);
    const double c = 6.0 / (kPi * kPi);
    const double est = std::cbrt(c * we.estimate / n2);
    const double lo = std::cbrt(c * std::max(0.0, we.lower()) / n2);
    const double hi = std::cbrt(c * we.upper() / n2);
    return {est, est - lo, hi - est};
}

ErdosTuranBound erdos_turan_bound(const SpectralProfile& prof) {
    const double n = static_cast<double>(prof.n);
    detail::Kahan prefix; // sum_{k<=K} |S_k|/k
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_k = 1;
    for (std::size_t k = 1; k <= prof.max_freq(); ++k) {
        prefix.add(std::abs(prof.sums[k - 1]) / static_cast<double>(k));
        const double f = n / static_cast<double>(k + 1) + 3.0 * prefix.value();
        if (f < best) {
            best = f;
            best_k = k;
        }
    }
    return {best / n, best_k};
}

double logsin_kernel(double x) {
    const double s = std::sin(kPi * frac(x));
    if (s == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return -std::log(4.0 * s * s);
}

double logsin_statistic(const PointSet& p) {
    const std::size_t n = p.size();
    if (n < 2) {
        throw std::invalid_argument("logsin_statistic: need at least two points");
    }
    const double cap = std::log(static_cast<double>(n));
    detail::Kahan acc;
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = logsin_kernel(p[m] - p[j]);
            acc.add(std::min(cap, v));
        }
    }
    return std::sqrt(cap) / static_cast<double>(n) * acc.value();
}

void write_profile_csv(std::ostream& out, const SpectralProfile& prof) {
    out << "k,re,im,energy\n";
    char buf[128];
    for (std::size_t k = 1; k <= prof.max_freq(); ++k) {
        const auto& s = prof.sums[k - 1];
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g\n", k, s.real(), s.imag(),
                      std::norm(s));
        out << buf;
    }
}

} // namespace ppclab
