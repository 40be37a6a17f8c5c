#include "ppclab/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "ppclab/detail/kahan.hpp"
#include "ppclab/errors.hpp"
#include "ppclab/pair_correlation.hpp"
#include "ppclab/quadrature.hpp"
#include "ppclab/spectral.hpp"

namespace ppclab {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kFourPiSq = 39.478417604357434475337963999505;

void require_positive_t(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("theta: t must be positive and finite");
    }
}

} // namespace

Theorem1Params::Theorem1Params(double delta_, std::size_t n_) : delta(delta_), n(n_) {
    if (!(delta > 0.0) || !(delta < 0.5)) {
        throw std::invalid_argument("Theorem1Params: delta must lie in (0, 1/2)");
    }
    if (n == 0) {
        throw std::invalid_argument("Theorem1Params: n must be positive");
    }
}

double Theorem1Params::s_max() const {
    return 8.0 / delta * std::sqrt(std::log(static_cast<double>(n)));
}

std::size_t Theorem1Params::k_window() const {
    return static_cast<std::size_t>(
        std::floor(std::pow(delta, 1.5) * static_cast<double>(n)));
}

double Theorem1Params::heat_time() const {
    const double dn = delta * static_cast<double>(n);
    return 1.0 / (dn * dn);
}

double theta_fourier(double t, double x, double tol) {
    require_positive_t(t);
    const double xr = frac(x);
    double sum = 1.0;
    for (int k = 1; k <= 512; ++k) {
        const double kd = static_cast<double>(k);
        const double w = std::exp(-kFourPiSq * t * kd * kd);
        if (2.0 * w < 0.5 * tol) {
            break;
        }
        sum += 2.0 * w * std::cos(kTwoPi * kd * xr);
    }
    return sum;
}

double theta_image(double t, double x, double tol) {
    require_positive_t(t);
    double xr = frac(x);
    if (xr > 0.5) {
        xr -= 1.0; // reduce to [-1/2, 1/2]
    }
    const double inv = 1.0 / std::sqrt(2.0 * kTwoPi * t); // (4 pi t)^{-1/2}
    const double q = 0.25 / t;
    double sum = inv * std::exp(-xr * xr * q);
    for (int m = 1; m <= 512; ++m) {
        const double a = xr + static_cast<double>(m);
        const double b = xr - static_cast<double>(m);
        sum += inv * (std::exp(-a * a * q) + std::exp(-b * b * q));
        // next pair is bounded by 2*inv*exp(-(m+1/2)^2/(4t))
        const double lo = static_cast<double>(m) + 0.5;
        if (2.0 * inv * std::exp(-lo * lo * q) < 0.5 * tol) {
            break;
        }
    }
    return sum;
}

double theta(const ThetaParams& params, double x) {
    require_positive_t(params.t);
    if (!(params.eval_tolerance > 0.0)) {
        throw std::invalid_argument("theta: eval_tolerance must be positive");
    }
    if (kFourPiSq * params.t >= 1.0) {
        return theta_fourier(params.t, x, params.eval_tolerance);
    }
    return theta_image(params.t, x, params.eval_tolerance);
}

double theta(double t, double x) {
    return theta(ThetaParams{t}, x);
}

double theta_pair_sum(const PointSet& p, double t) {
    require_positive_t(t);
    const ThetaParams params{t};
    const std::size_t n = p.size();
    detail::Kahan acc;
    acc.add(static_cast<double>(n) * theta(params, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            acc.add(2.0 * theta(params, circle_dist(p[i], p[j])));
        }
    }
    return acc.value();
}

VerificationRecord smoothing_domination_check(const PointSet& p,
                                              const Theorem1Params& params) {
    VerificationRecord rec;
    rec.name = "smoothing_domination";
    const double n = static_cast<double>(p.size());
    const std::size_t window = params.k_window();
    rec.params = {{"delta", params.delta},
                  {"N", n},
                  {"k_window", static_cast<double>(window)},
                  {"t", params.heat_time()}};
    if (window == 0) {
        rec.status = CheckStatus::Vacuous;
        return rec;
    }
    const SpectralProfile prof = build_profile(p, window);
    rec.lhs = n * n + energy_window(prof, window);
    rec.rhs = std::exp(kFourPiSq * params.delta) * theta_pair_sum(p, params.heat_time());
    rec.slack = rec.rhs - rec.lhs;
    rec.status = rec.slack >= -1e-9 * rec.rhs ? CheckStatus::Pass : CheckStatus::Fail;
    return rec;
}

VerificationRecord rearrangement_bound(const PointSet& p, const Theorem1Params& params) {
    VerificationRecord rec;
    rec.name = "rearrangement_bound";
    const double n = static_cast<double>(p.size());
    const double t = params.heat_time();
    const double s_max = params.s_max();
    rec.params = {{"delta", params.delta}, {"N", n}, {"t", t}, {"s_max", s_max}};

    if (p.size() < 2 || s_max < 1.0) {
        rec.status = CheckStatus::NotApplicable;
        return rec;
    }
    const PPCCurve curve = PPCCurve::from_points(p);
    const HypothesisResult hyp = theorem1_hypothesis_check(curve, params.delta);
    rec.params["hypothesis_worst_s"] = hyp.worst.s;
    rec.params["hypothesis_worst_slack"] = hyp.worst.bound - hyp.worst.statistic;
    if (!hyp.holds) {
        rec.status = CheckStatus::NotApplicable;
        return rec;
    }

    const ThetaParams theta_params{t};
    rec.lhs = theta_pair_sum(p, t) - n * theta(theta_params, 0.0);

    const double beta = s_max / n;
    QuadratureResult quad = integrate_adaptive(
        [&](double x) { return theta(theta_params, x); }, 1.0 / n, beta, 1e-10);
    if (!quad.converged) {
        throw numerical_error("rearrangement_bound: theta integral did not converge");
    }
    rec.params["theta_integral"] = quad.value;
    const double phi_alpha = (1.0 + params.delta) * 2.0 * n;
    rec.rhs = theta(theta_params, 0.0) * phi_alpha +
              (1.0 + params.delta) * 2.0 * n * n * quad.value +
              theta(theta_params, beta) * n * n;
    rec.slack = rec.rhs - rec.lhs;
    rec.status = rec.slack >= -1e-9 * rec.rhs ? CheckStatus::Pass : CheckStatus::Fail;
    return rec;
}

VerificationRecord theta_window_halfmass_check(const Theorem1Params& params) {
    VerificationRecord rec;
    rec.name = "theta_window_halfmass";
    rec.informational = true;
    const double n = static_cast<double>(params.n);
    const double s_max = params.s_max();
    rec.params = {{"delta", params.delta}, {"N", n}, {"t", params.heat_time()},
                  {"s_max", s_max}};
    if (s_max < 1.0) {
        rec.status = CheckStatus::Vacuous;
        return rec;
    }
    const ThetaParams theta_params{params.heat_time()};
    rec.lhs = integrate([&](double x) { return theta(theta_params, x); }, 1.0 / n,
                        s_max / n, 1e-10);
    rec.rhs = 0.5;
    rec.slack = rec.rhs - rec.lhs;
    rec.status = rec.slack >= -1e-12 ? CheckStatus::Pass : CheckStatus::Fail;
    return rec;
}

} // namespace ppclab
