#include "ppclab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ppclab/detail/kahan.hpp"
#include "ppclab/discrepancy.hpp"
#include "ppclab/errors.hpp"
#include "ppclab/pair_correlation.hpp"
#include "ppclab/quadrature.hpp"
#include "ppclab/spectral.hpp"
#include "ppclab/theta.hpp"

namespace ppclab {
namespace {

constexpr double kPi = 3.141592653589793238462643383280;

// ---------------------------------------------------------------- families

struct ParsedFamily {
    std::string family;
    // key -> (values, position of the key in the spec string)
    std::vector<std::pair<std::string, std::pair<std::vector<std::string>, std::size_t>>> params;
};

[[noreturn]] void spec_error(std::size_t pos, const std::string& what) {
    throw std::invalid_argument("family spec error at position " + std::to_string(pos) +
                                ": " + what);
}

ParsedFamily parse_family_spec(const std::string& spec) {
    ParsedFamily out;
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos || colon == 0) {
        spec_error(0, "expected 'family:key=value,...'");
    }
    out.family = spec.substr(0, colon);
    static const char* kFamilies[] = {"equispaced", "kronecker", "vdc", "random",
                                      "perturbed"};
    if (std::find_if(std::begin(kFamilies), std::end(kFamilies), [&](const char* f) {
            return out.family == f;
        }) == std::end(kFamilies)) {
        spec_error(0, "unknown family '" + out.family + "'");
    }

    std::size_t pos = colon + 1;
    while (pos < spec.size()) {
        std::size_t next = spec.find(',', pos);
        if (next == std::string::npos) {
            next = spec.size();
        }
        const std::string item = spec.substr(pos, next - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            spec_error(pos, "expected key=value in '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        std::vector<std::string> values;
        std::size_t vpos = eq + 1;
        while (vpos <= item.size()) {
            std::size_t bar = item.find('|', vpos);
            if (bar == std::string::npos) {
                bar = item.size();
            }
            const std::string v = item.substr(vpos, bar - vpos);
            if (!v.empty()) {
                values.push_back(v);
            }
            if (bar == item.size()) {
                break;
            }
            vpos = bar + 1;
        }
        out.params.emplace_back(key, std::make_pair(values, pos));
        pos = next + 1;
    }
    return out;
}

double parse_double(const std::string& v, std::size_t pos) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || !std::isfinite(x)) {
        spec_error(pos, "bad numeric value '" + v + "'");
    }
    return x;
}

std::uint64_t parse_u64(const std::string& v, std::size_t pos) {
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0') {
        spec_error(pos, "bad integer value '" + v + "'");
    }
    return static_cast<std::uint64_t>(x);
}

PointSet instantiate_family(const std::string& family,
                            const std::map<std::string, std::pair<std::string, std::size_t>>& kv) {
    auto get = [&](const char* key) -> std::pair<std::string, std::size_t> {
        auto it = kv.find(key);
        if (it == kv.end()) {
            spec_error(0, std::string("missing parameter '") + key + "' for family '" +
                              family + "'");
        }
        return it->second;
    };
    auto require_only = [&](std::initializer_list<const char*> keys) {
        for (const auto& [key, value] : kv) {
            if (std::find_if(keys.begin(), keys.end(), [&](const char* k) {
                    return key == k;
                }) == keys.end()) {
                spec_error(value.second, "unknown parameter '" + key + "'");
            }
        }
    };

    const auto [n_str, n_pos] = get("N");
    const std::uint64_t n = parse_u64(n_str, n_pos);
    if (n == 0) {
        spec_error(n_pos, "N must be positive");
    }

    if (family == "equispaced") {
        require_only({"N"});
        return gen_equispaced(n);
    }
    if (family == "kronecker") {
        require_only({"N", "alpha"});
        const auto [a_str, a_pos] = get("alpha");
        return gen_kronecker(n, parse_double(a_str, a_pos));
    }
    if (family == "vdc") {
        require_only({"N", "base"});
        const auto [b_str, b_pos] = get("base");
        const std::uint64_t base = parse_u64(b_str, b_pos);
        if (base < 2) {
            spec_error(b_pos, "base must be >= 2");
        }
        return gen_van_der_corput(n, static_cast<unsigned>(base));
    }
    if (family == "random") {
        require_only({"N", "seed"});
        const auto [s_str, s_pos] = get("seed");
        return gen_random(n, Seed{parse_u64(s_str, s_pos)});
    }
    // perturbed
    require_only({"N", "seed", "jitter"});
    const auto [s_str, s_pos] = get("seed");
    const auto [j_str, j_pos] = get("jitter");
    const double jitter = parse_double(j_str, j_pos);
    if (jitter < 0.0) {
        spec_error(j_pos, "jitter must be >= 0");
    }
    return gen_perturbed(n, Seed{parse_u64(s_str, s_pos)}, jitter);
}

} // namespace

PointSet make_family(const std::string& spec) {
    const ParsedFamily parsed = parse_family_spec(spec);
    std::map<std::string, std::pair<std::string, std::size_t>> kv;
    for (const auto& [key, vp] : parsed.params) {
        if (vp.first.size() != 1) {
            spec_error(vp.second, "parameter '" + key + "' needs exactly one value");
        }
        if (!kv.emplace(key, std::make_pair(vp.first[0], vp.second)).second) {
            spec_error(vp.second, "duplicate parameter '" + key + "'");
        }
    }
    return instantiate_family(parsed.family, kv);
}

std::vector<PointSet> make_family_range(const std::string& spec) {
    const ParsedFamily parsed = parse_family_spec(spec);
    std::vector<PointSet> out;

    std::vector<std::size_t> index(parsed.params.size(), 0);
    for (const auto& [key, vp] : parsed.params) {
        if (vp.first.empty()) {
            return out; // empty range
        }
    }
    while (true) {
        std::map<std::string, std::pair<std::string, std::size_t>> kv;
        for (std::size_t i = 0; i < parsed.params.size(); ++i) {
            const auto& [key, vp] = parsed.params[i];
            if (!kv.emplace(key, std::make_pair(vp.first[index[i]], vp.second)).second) {
                spec_error(vp.second, "duplicate parameter '" + key + "'");
            }
        }
        out.push_back(instantiate_family(parsed.family, kv));
        // odometer, last key fastest
        std::size_t i = parsed.params.size();
        while (i > 0) {
            --i;
            if (++index[i] < parsed.params[i].second.first.size()) {
                break;
            }
            index[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (parsed.params.empty()) {
            return out;
        }
    }
}

// ---------------------------------------------------------------- config

double AnalysisConfig::effective_budget() const {
    if (work_budget > 0.0) {
        return work_budget;
    }
    if (const char* env = std::getenv("PPCLAB_MAX_WORK")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) {
            return v;
        }
    }
    return 4e9;
}

std::size_t AnalysisConfig::effective_freq(std::size_t n) const {
    const double nd = static_cast<double>(n);
    const double budget = effective_budget();
    if (max_freq > 0) {
        if (nd * static_cast<double>(max_freq) + nd * nd > budget) {
            throw std::invalid_argument(
                "requested K exceeds the work budget (set PPCLAB_MAX_WORK to raise it)");
        }
        return max_freq;
    }
    double k = std::max(1e4, 100.0 * nd * nd);
    k = std::min(k, 1e7);
    k = std::min(k, std::max(1.0, (budget - nd * nd) / nd));
    return static_cast<std::size_t>(k);
}

PointSet load_input(const AnalysisConfig& config) {
    if (config.input_file && config.family) {
        throw std::invalid_argument("give either an input file or a family spec, not both");
    }
    if (config.input_file) {
        return load_points_file(*config.input_file);
    }
    if (config.family) {
        return make_family(*config.family);
    }
    throw std::invalid_argument("no input: pass --input FILE or --family SPEC");
}

// ---------------------------------------------------------------- analyze

namespace {

nlohmann::ordered_json to_json(const BoundedValue& v) {
    return {{"estimate", v.estimate},
            {"lower", v.lower()},
            {"upper", v.upper()},
            {"width", v.width()}};
}

nlohmann::ordered_json to_json(const DiscrepancyResult& r) {
    const char* method = r.method == DiscrepancyMethod::ExtremeExact ? "extreme-exact"
                         : r.method == DiscrepancyMethod::StarExact  ? "star-exact"
                                                                     : "star-bracket";
    return {{"value", r.value},
            {"witness",
             {{"a", r.witness.a}, {"b", r.witness.b}, {"closed", r.witness.closed}}},
            {"method", method}};
}

} // namespace

nlohmann::ordered_json analyze(const PointSet& p, const AnalysisConfig& config) {
    const std::size_t n = p.size();
    const std::size_t k = config.effective_freq(n);
    const SpectralProfile prof = build_profile(p, k);

    nlohmann::ordered_json report;
    report["label"] = p.label();
    report["n"] = n;
    report["K"] = k;
    report["discrepancy_extreme"] = to_json(extreme_discrepancy(p));
    report["discrepancy_star"] = to_json(star_discrepancy(p));
    report["diaphony_closed"] = diaphony_closed(p);
    report["diaphony_spectral"] = to_json(diaphony(prof, DiaphonyNorm::Classical));
    report["a_direct"] = A_direct(p);
    report["a_spectral"] = to_json(A_spectral(prof));
    report["leveque"] = to_json(leveque_bound(prof));
    const ErdosTuranBound et = erdos_turan_bound(prof);
    report["erdos_turan"] = {{"bound", et.bound}, {"k_star", et.k_star}};
    if (n >= 2) {
        report["logsin_statistic"] = logsin_statistic(p);
    } else {
        report["logsin_statistic"] = nullptr;
    }

    nlohmann::ordered_json curve_json = nlohmann::ordered_json::array();
    if (n >= 2) {
        const PPCCurve curve = PPCCurve::from_points(p);
        for (double s : config.s_grid) {
            curve_json.push_back({{"s", s},
                                  {"statistic", ppc_statistic(curve, s)},
                                  {"poisson_reference", 2.0 * s}});
        }
    }
    report["ppc"] = curve_json;
    return report;
}

std::string analyze_csv(const nlohmann::ordered_json& report) {
    std::ostringstream out;
    out.precision(17);
    out << "n,K,d_extreme,d_star,diaphony_closed,diaphony_estimate,diaphony_lower,"
           "diaphony_upper,a_direct,a_estimate,a_lower,a_upper,leveque_estimate,"
           "leveque_upper,erdos_turan,erdos_turan_kstar,logsin\n";
    out << report["n"].get<std::size_t>() << ',' << report["K"].get<std::size_t>() << ','
        << report["discrepancy_extreme"]["value"].get<double>() << ','
        << report["discrepancy_star"]["value"].get<double>() << ','
        << report["diaphony_closed"].get<double>() << ','
        << report["diaphony_spectral"]["estimate"].get<double>() << ','
        << report["diaphony_spectral"]["lower"].get<double>() << ','
        << report["diaphony_spectral"]["upper"].get<double>() << ','
        << report["a_direct"].get<double>() << ','
        << report["a_spectral"]["estimate"].get<double>() << ','
        << report["a_spectral"]["lower"].get<double>() << ','
        << report["a_spectral"]["upper"].get<double>() << ','
        << report["leveque"]["estimate"].get<double>() << ','
        << report["leveque"]["upper"].get<double>() << ','
        << report["erdos_turan"]["bound"].get<double>() << ','
        << report["erdos_turan"]["k_star"].get<std::size_t>() << ',';
    if (report["logsin_statistic"].is_null()) {
        out << "nan";
    } else {
        out << report["logsin_statistic"].get<double>();
    }
    out << '\n';
    return out.str();
}

// ---------------------------------------------------------------- verify

namespace {

VerificationRecord max_error_record(std::string name, double max_err, double tol) {
    VerificationRecord rec;
    rec.name = std::move(name);
    rec.lhs = max_err;
    rec.rhs = tol;
    rec.slack = tol - max_err;
    rec.status = rec.slack >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
    return rec;
}

VerificationRecord a_identity_record(const PointSet& p, const SpectralProfile& prof) {
    VerificationRecord rec;
    rec.name = "a_identity";
    const double direct = A_direct(p);
    const BoundedValue spectral = A_spectral(prof);
    rec.lhs = direct;
    rec.rhs = spectral.estimate;
    const double allowance = spectral.tail_high + 1e-9;
    rec.slack = allowance - std::abs(direct - spectral.estimate);
    rec.status = rec.slack >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
    rec.params = {{"K", static_cast<double>(prof.max_freq())},
                  {"tail", spectral.tail_high}};
    return rec;
}

VerificationRecord diaphony_identity_record(const PointSet& p, const SpectralProfile& prof) {
    VerificationRecord rec;
    rec.name = "diaphony_identity";
    const double closed = diaphony_closed(p);
    const BoundedValue spectral = diaphony(prof, DiaphonyNorm::Classical);
    rec.lhs = closed;
    rec.rhs = spectral.estimate;
    rec.slack = std::min(closed - (spectral.lower() - 1e-9),
                         (spectral.upper() + 1e-9) - closed);
    rec.status = rec.slack >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
    rec.params = {{"K", static_cast<double>(prof.max_freq())},
                  {"enclosure_width", spectral.width()}};
    return rec;
}

VerificationRecord fourier_coeff_record() {
    double max_err = 0.0;
    for (std::int64_t k = 1; k <= 12; ++k) {
        const double integral = integrate(
            [k](double s) { return fourier_coeff_indicator(k, s); }, 0.0, 0.5, 0.0, 1e-12);
        const double expected = (k % 2 == 1) ? 1.0 / (static_cast<double>(k * k) * kPi * kPi)
                                             : 0.0;
        max_err = std::max(max_err, std::abs(integral - expected));

        const double diag = integrate(
            [k](double s) {
                const double c = fourier_coeff_indicator(k, s);
                return c * c;
            },
            0.0, 0.5, 0.0, 1e-12);
        max_err = std::max(
            max_err, std::abs(diag - 1.0 / (4.0 * static_cast<double>(k * k) * kPi * kPi)));
    }
    for (auto [k, m] : {std::pair<int, int>{1, 2}, {2, 3}, {1, 4}}) {
        const double cross = integrate(
            [k, m](double s) {
                return fourier_coeff_indicator(k, s) * fourier_coeff_indicator(m, s);
            },
            0.0, 0.5, 0.0, 1e-12);
        max_err = std::max(max_err, std::abs(cross));
    }
    return max_error_record("fourier_coeff_integrals", max_err, 1e-10);
}

VerificationRecord logsin_integral_record() {
    const double integral =
        integrate([](double x) { return logsin_kernel(x); }, 0.0, 0.5, 0.0, 1e-8);
    return max_error_record("logsin_kernel_integral", std::abs(integral), 1e-6);
}

VerificationRecord logsin_series_record() {
    // Partial sums of sum_k cos(2 pi k x)/k at x = 0.3. The series converges
    // to -log(2 sin(pi x)), i.e. half the kernel value.
    const double x = 0.3;
    detail::Kahan acc;
    for (int k = 1; k <= 10000; ++k) {
        acc.add(std::cos(2.0 * kPi * static_cast<double>(k) * x) / static_cast<double>(k));
    }
    const double limit = 0.5 * logsin_kernel(x);
    VerificationRecord rec = max_error_record("logsin_series", std::abs(acc.value() - limit), 0.01);
    rec.params = {{"x", x}, {"K", 10000.0}, {"limit", limit}};
    return rec;
}

VerificationRecord theta_normalization_record() {
    double max_err = 0.0;
    for (double t : {1e-3, 1e-2, 1e-1, 1.0}) {
        const double integral =
            integrate([t](double x) { return theta(t, x); }, 0.0, 1.0, 0.0, 1e-12);
        max_err = std::max(max_err, std::abs(integral - 1.0));
    }
    return max_error_record("theta_normalization", max_err, 1e-10);
}

VerificationRecord theta_dual_branch_record() {
    // 20x20 grid of (t, x) spanning the 4 pi^2 t = 1 dispatch point.
    double max_err = 0.0;
    double min_theta = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 20; ++i) {
        const double t = 0.004 * std::pow(40.0, i / 19.0); // 0.004 .. 0.16
        for (int j = 0; j < 20; ++j) {
            const double x = static_cast<double>(j) / 20.0;
            const double f = theta_fourier(t, x);
            const double g = theta_image(t, x);
            max_err = std::max(max_err, std::abs(f - g));
            min_theta = std::min(min_theta, std::min(f, g));
        }
    }
    VerificationRecord rec = max_error_record("theta_dual_branch", max_err, 1e-12);
    rec.params = {{"min_theta", min_theta}};
    if (min_theta < 0.0) {
        rec.status = CheckStatus::Fail;
    }
    return rec;
}

VerificationRecord theta_semigroup_record() {
    double max_err = 0.0;
    for (auto pair : {std::pair<double, double>{0.01, 0.02}, {0.05, 0.05}}) {
        const double t1 = pair.first;
        const double t2 = pair.second;
        for (double x : {0.0, 0.3}) {
            const double conv = integrate(
                [=](double y) { return theta(t1, x - y) * theta(t2, y); }, 0.0, 1.0,
                1e-10);
            max_err = std::max(max_err, std::abs(conv - theta(t1 + t2, x)));
        }
    }
    return max_error_record("theta_semigroup", max_err, 1e-8);
}

VerificationRecord plancherel_record(const PointSet& p) {
    VerificationRecord rec;
    rec.name = "plancherel_bridge";
    const double n = static_cast<double>(p.size());
    double max_err = 0.0;
    double allowance = 1e-8;
    for (double t : {0.005, 0.05}) {
        // spectral side: N^2 + 2 sum_{k>=1} e^{-4 pi^2 k^2 t} |S_k|^2
        const double damp = 4.0 * kPi * kPi * t;
        std::size_t cutoff = 1;
        while (2.0 * n * n * std::exp(-damp * static_cast<double>(cutoff * cutoff)) >=
               1e-13) {
            ++cutoff;
        }
        const SpectralProfile prof = build_profile(p, cutoff);
        detail::Kahan acc;
        acc.add(n * n);
        for (std::size_t k = 1; k <= cutoff; ++k) {
            acc.add(2.0 * std::exp(-damp * static_cast<double>(k) * static_cast<double>(k)) *
                    std::norm(prof.sums[k - 1]));
        }
        const double tail =
            2.0 * n * n * std::exp(-damp * static_cast<double>((cutoff + 1) * (cutoff + 1)));
        allowance = std::max(allowance, 1e-8 + tail);
        max_err = std::max(max_err, std::abs(theta_pair_sum(p, t) - acc.value()));
    }
    rec.lhs = max_err;
    rec.rhs = allowance;
    rec.slack = allowance - max_err;
    rec.status = rec.slack >= 0.0 ? CheckStatus::Pass : CheckStatus::Fail;
    return rec;
}

VerificationRecord hypothesis_record(const PointSet& p, double delta) {
    VerificationRecord rec;
    rec.name = "theorem1_hypothesis";
    rec.informational = true;
    rec.params = {{"delta", delta}, {"N", static_cast<double>(p.size())}};
    if (p.size() < 2) {
        rec.status = CheckStatus::NotApplicable;
        return rec;
    }
    const HypothesisResult hyp =
        theorem1_hypothesis_check(PPCCurve::from_points(p), delta);
    rec.params["s_max"] = hyp.s_max;
    if (hyp.vacuous) {
        rec.status = CheckStatus::Vacuous;
        return rec;
    }
    rec.lhs = hyp.worst.statistic;
    rec.rhs = hyp.worst.bound;
    rec.slack = hyp.worst.bound - hyp.worst.statistic;
    rec.params["worst_s"] = hyp.worst.s;
    rec.status = hyp.holds ? CheckStatus::Pass : CheckStatus::Fail;
    return rec;
}

VerificationRecord theorem2_record(const PointSet& p) {
    VerificationRecord rec;
    rec.name = "theorem2_ratios";
    rec.informational = true;
    if (p.size() < 2) {
        rec.status = CheckStatus::NotApplicable;
        return rec;
    }
    const Theorem2Report rep = theorem2_report(p);
    rec.lhs = rep.r_upper;
    rec.rhs = rep.r_lower;
    rec.params = {{"A", rep.a_value},
                  {"D", rep.d_n},
                  {"r_upper", rep.r_upper},
                  {"r_lower", rep.r_lower},
                  {"d_above_cbrt", rep.d_above_cbrt ? 1.0 : 0.0}};
    rec.status = std::isfinite(rep.r_upper) && rep.r_upper > 0.0 ? CheckStatus::Pass
                                                                 : CheckStatus::Fail;
    return rec;
}

VerificationRecord cassels_record(const PointSet& p, std::size_t exact_cap) {
    VerificationRecord rec;
    rec.name = "cassels_ratio";
    rec.informational = true;
    const CasselsReport rep = cassels_report(p, exact_cap);
    rec.lhs = rep.d_n;
    rec.rhs = rep.diff_upper;
    rec.params = {{"diff_lower", rep.diff_lower},
                  {"diff_upper", rep.diff_upper},
                  {"diff_exact", rep.diff_exact ? 1.0 : 0.0},
                  {"ratio_lower", rep.ratio_lower},
                  {"ratio_upper", rep.ratio_upper}};
    rec.status = std::isfinite(rep.ratio_upper) ? CheckStatus::Pass : CheckStatus::Fail;
    return rec;
}

VerificationRecord domination_record(std::string name, double discrepancy, double bound) {
    VerificationRecord rec;
    rec.name = std::move(name);
    rec.lhs = discrepancy;
    rec.rhs = bound;
    rec.slack = bound - discrepancy;
    rec.status = rec.slack >= -1e-12 ? CheckStatus::Pass : CheckStatus::Fail;
    return rec;
}

} // namespace

std::vector<VerificationRecord> verify_suite(const PointSet& p,
                                             const AnalysisConfig& config) {
    std::vector<VerificationRecord> records;
    const std::size_t n = p.size();
    const std::size_t k = config.effective_freq(n);
    const SpectralProfile prof = build_profile(p, k);
    const double delta = config.delta_or_default();

    auto guarded = [&records](const std::string& name, auto&& fn) {
        try {
            records.push_back(fn());
        } catch (const std::exception& e) {
            VerificationRecord rec;
            rec.name = name;
            rec.status = CheckStatus::Fail;
            rec.slack = std::numeric_limits<double>::quiet_NaN();
            rec.note = e.what();
            records.push_back(rec);
        }
    };

    guarded("a_identity", [&] { return a_identity_record(p, prof); });
    guarded("diaphony_identity", [&] { return diaphony_identity_record(p, prof); });
    guarded("corollary2", [&] { return corollary2_check(prof); });
    guarded("corollary1", [&]() -> VerificationRecord {
        if (n > config.cap_n) {
            VerificationRecord rec;
            rec.name = "corollary1";
            rec.status = CheckStatus::NotApplicable;
            rec.params = {{"N", static_cast<double>(n)},
                          {"cap_n", static_cast<double>(config.cap_n)}};
            return rec;
        }
        return corollary1_check(p, std::min<std::size_t>(k, 20000), config.cap_n);
    });

    const double extreme = extreme_discrepancy(p).value;
    guarded("discrepancy_vs_leveque", [&] {
        return domination_record("discrepancy_vs_leveque", extreme,
                                 leveque_bound(prof).upper());
    });
    guarded("discrepancy_vs_erdos_turan", [&] {
        return domination_record("discrepancy_vs_erdos_turan", extreme,
                                 erdos_turan_bound(prof).bound);
    });

    guarded("fourier_coeff_integrals", fourier_coeff_record);
    guarded("logsin_kernel_integral", logsin_integral_record);
    guarded("logsin_series", logsin_series_record);
    guarded("theta_normalization", theta_normalization_record);
    guarded("theta_dual_branch", theta_dual_branch_record);
    guarded("theta_semigroup", theta_semigroup_record);
    guarded("plancherel_bridge", [&] { return plancherel_record(p); });

    const Theorem1Params t1(delta, n);
    guarded("smoothing_domination", [&] { return smoothing_domination_check(p, t1); });
    guarded("rearrangement_bound", [&] { return rearrangement_bound(p, t1); });
    guarded("theorem1_hypothesis", [&] { return hypothesis_record(p, delta); });
    guarded("theta_window_halfmass", [&] { return theta_window_halfmass_check(t1); });
    guarded("theorem2_ratios", [&] { return theorem2_record(p); });
    guarded("cassels_ratio", [&] { return cassels_record(p, config.cassels_exact_cap); });

    std::sort(records.begin(), records.end(),
              [](const VerificationRecord& a, const VerificationRecord& b) {
                  return a.name < b.name;
              });
    return records;
}

int verify_exit_code(const std::vector<VerificationRecord>& records) {
    for (const auto& rec : records) {
        if (rec.counts_as_failure()) {
            return 1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- sweep

std::string sweep_csv(const std::string& range_spec, const AnalysisConfig& config) {
    std::ostringstream out;
    out.precision(17);
    out << "n,delta,d_extreme,a_direct,r_upper,r_lower,hypothesis,energy_ratio\n";
    const double delta = config.delta_or_default();
    for (const PointSet& p : make_family_range(range_spec)) {
        const std::size_t n = p.size();
        out << n << ',' << delta << ',';
        if (n < 2) {
            out << extreme_discrepancy(p).value << ',' << A_direct(p)
                << ",nan,nan,na,nan\n";
            continue;
        }
        const Theorem2Report rep = theorem2_report(p);
        const HypothesisResult hyp =
            theorem1_hypothesis_check(PPCCurve::from_points(p), delta);
        const char* status = hyp.vacuous ? "vacuous" : (hyp.holds ? "holds" : "violated");

        const Theorem1Params t1(delta, n);
        double energy_ratio = std::numeric_limits<double>::quiet_NaN();
        if (t1.k_window() >= 1) {
            const SpectralProfile prof = build_profile(p, t1.k_window());
            energy_ratio = energy_window(prof, t1.k_window()) /
                           (delta * static_cast<double>(n) * static_cast<double>(n));
        }
        out << rep.d_n << ',' << rep.a_value << ',' << rep.r_upper << ',' << rep.r_lower
            << ',' << status << ',' << energy_ratio << '\n';
    }
    return out.str();
}

} // namespace ppclab
