#pragma once

namespace ppclab::detail {

// Compensated accumulator; long k-indexed series are summed through this so
// near-equality checks are not polluted by accumulation error.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace ppclab::detail
