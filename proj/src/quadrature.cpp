#include "ppclab/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "ppclab/errors.hpp"

namespace ppclab {
namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK qk15 abscissae,
// for the interval [-1, 1]; last node is the midpoint).
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Gauss weights belong to the odd-indexed Kronrod nodes plus the midpoint.
constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double a, b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const double fc = f(c);
    double kron = kKronrodW[7] * fc;
    double gauss = kGaussW[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kNodes[i];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        kron += kKronrodW[i] * (f1 + f2);
        if (i % 2 == 1) {
            gauss += kGaussW[(i - 1) / 2] * (f1 + f2);
        }
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol,
                                    std::size_t max_segments) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<Segment> heap;
    Segment first = evaluate(f, a, b);
    res.evaluations = 15;
    double total = first.value;
    double err = first.error;
    heap.push(first);

    const double min_width = (b - a) * std::numeric_limits<double>::epsilon() * 8.0;
    std::size_t segments = 1;
    auto tolerance = [&]() { return std::max(abs_tol, rel_tol * std::abs(total)); };

    while (err > tolerance() && segments < max_segments) {
        Segment worst = heap.top();
        if (worst.b - worst.a <= min_width) {
            break; // cannot refine further in binary64
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluate(f, worst.a, mid);
        Segment right = evaluate(f, mid, worst.b);
        res.evaluations += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }

    res.value = sign * total;
    res.error = err;
    res.converged = err <= tolerance();
    return res;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, std::size_t max_segments) {
    QuadratureResult r = integrate_adaptive(f, a, b, rel_tol, abs_tol, max_segments);
    if (!r.converged) {
        throw numerical_error("integrate: tolerance not reached (error " +
                              std::to_string(r.error) + ")");
    }
    return r.value;
}

} // namespace ppclab
