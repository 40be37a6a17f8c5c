#include "ppclab/points.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ppclab/errors.hpp"
#include "ppclab/splitmix.hpp"

namespace ppclab {

double frac(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("frac: input must be finite");
    }
    double f = x - std::floor(x);
    // x slightly below an integer can round the difference up to 1.
    return f < 1.0 ? f : 0.0;
}

double circle_dist(double x, double y) {
    double d = frac(x - y); // validates finiteness of both inputs
    return std::min(d, 1.0 - d);
}

PointSet::PointSet(std::vector<double> coords, std::string label)
    : coords_(std::move(coords)), label_(std::move(label)) {
    if (coords_.empty()) {
        throw std::invalid_argument("PointSet: at least one point required");
    }
    for (double& c : coords_) {
        c = frac(c);
    }
}

PointSet gen_equispaced(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("gen_equispaced: n must be positive");
    }
    std::vector<double> pts(n);
    for (std::size_t j = 0; j < n; ++j) {
        pts[j] = static_cast<double>(j) / static_cast<double>(n);
    }
    return PointSet(std::move(pts), "equispaced:N=" + std::to_string(n));
}

PointSet gen_kronecker(std::size_t n, double alpha) {
    if (n == 0) {
        throw std::invalid_argument("gen_kronecker: n must be positive");
    }
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("gen_kronecker: alpha must be finite");
    }
    std::vector<double> pts(n);
    // indexing starts at 1 to match (x_n)_{n>=1}
    for (std::size_t j = 1; j <= n; ++j) {
        pts[j - 1] = frac(static_cast<double>(j) * alpha);
    }
    std::ostringstream label;
    label << "kronecker:N=" << n << ",alpha=" << alpha;
    return PointSet(std::move(pts), label.str());
}

PointSet gen_van_der_corput(std::size_t n, unsigned base) {
    if (n == 0) {
        throw std::invalid_argument("gen_van_der_corput: n must be positive");
    }
    if (base < 2) {
        throw std::invalid_argument("gen_van_der_corput: base must be >= 2");
    }
    std::vector<double> pts(n);
    for (std::size_t j = 1; j <= n; ++j) {
        double inv = 0.0;
        double place = 1.0 / static_cast<double>(base);
        for (std::size_t m = j; m > 0; m /= base) {
            inv += static_cast<double>(m % base) * place;
            place /= static_cast<double>(base);
        }
        pts[j - 1] = inv;
    }
    return PointSet(std::move(pts),
                    "vdc:N=" + std::to_string(n) + ",base=" + std::to_string(base));
}

PointSet gen_random(std::size_t n, Seed seed) {
    if (n == 0) {
        throw std::invalid_argument("gen_random: n must be positive");
    }
    SplitMix64 rng(seed.value);
    std::vector<double> pts(n);
    for (double& p : pts) {
        p = rng.next_unit();
    }
    return PointSet(std::move(pts),
                    "random:N=" + std::to_string(n) + ",seed=" + std::to_string(seed.value));
}

PointSet gen_perturbed(std::size_t n, Seed seed, double jitter) {
    if (n == 0) {
        throw std::invalid_argument("gen_perturbed: n must be positive");
    }
    if (!(jitter >= 0.0) || !std::isfinite(jitter)) {
        throw std::invalid_argument("gen_perturbed: jitter must be >= 0");
    }
    SplitMix64 rng(seed.value);
    const double nd = static_cast<double>(n);
    std::vector<double> pts(n);
    for (std::size_t j = 0; j < n; ++j) {
        double u = rng.next_unit() - 0.5;
        pts[j] = frac(static_cast<double>(j) / nd + u * jitter / nd);
    }
    std::ostringstream label;
    label << "perturbed:N=" << n << ",seed=" << seed.value << ",jitter=" << jitter;
    return PointSet(std::move(pts), label.str());
}

PointSet shift(const PointSet& p, double c) {
    std::vector<double> pts(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        pts[i] = frac(p[i] + c);
    }
    return PointSet(std::move(pts), p.label());
}

PointSet difference_set(const PointSet& p) {
    const std::size_t n = p.size();
    std::vector<double> diffs;
    diffs.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            diffs.push_back(frac(p[i] - p[j]));
        }
    }
    return PointSet(std::move(diffs), "diff(" + p.label() + ")");
}

PointSet load_points(std::istream& in, std::string label) {
    std::vector<double> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) {
            continue;
        }
        if (line[start] == '#') {
            continue;
        }
        const char* begin = line.c_str() + start;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) {
            throw parse_error(line_no, "not a number: '" + line + "'");
        }
        while (*end == ' ' || *end == '\t' || *end == '\r') {
            ++end;
        }
        if (*end != '\0') {
            throw parse_error(line_no, "trailing garbage: '" + line + "'");
        }
        if (!std::isfinite(v)) {
            throw parse_error(line_no, "value must be finite");
        }
        pts.push_back(frac(v));
    }
    if (pts.empty()) {
        throw std::invalid_argument("load_points: no points in input");
    }
    return PointSet(std::move(pts), std::move(label));
}

PointSet load_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return load_points(in, path);
}

void save_points(std::ostream& out, const PointSet& p) {
    if (!p.label().empty()) {
        out << "# " << p.label() << "\n";
    }
    char buf[64];
    for (double x : p.coords()) {
        // 17 significant digits round-trip binary64 exactly
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out << buf << "\n";
    }
}

void save_points_file(const std::string& path, const PointSet& p) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    save_points(out, p);
}

} // namespace ppclab
