#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ppclab {

struct Seed {
    std::uint64_t value = 0;
};

/// Fractional part x - floor(x), always in [0, 1). Throws on non-finite input.
double frac(double x);

/// Wrap-around distance on the unit torus, in [0, 1/2].
double circle_dist(double x, double y);

// Finite multiset of points on the torus. Coordinates are wrapped to [0,1)
// at construction and never mutated afterwards; duplicates are kept (the
// difference set of any set has them).
class PointSet {
public:
    explicit PointSet(std::vector<double> coords, std::string label = {});

    std::size_t size() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }
    const std::string& label() const { return label_; }

private:
    std::vector<double> coords_;
    std::string label_;
};

PointSet gen_equispaced(std::size_t n);
PointSet gen_kronecker(std::size_t n, double alpha);
PointSet gen_van_der_corput(std::size_t n, unsigned base);
PointSet gen_random(std::size_t n, Seed seed);
// Lattice j/n jittered by u_j * jitter / n, u_j uniform in [-1/2, 1/2].
PointSet gen_perturbed(std::size_t n, Seed seed, double jitter);

/// All points translated by c (mod 1).
PointSet shift(const PointSet& p, double c);

/// The n^2 ordered differences frac(x_i - x_j), i = j included.
PointSet difference_set(const PointSet& p);

// Text format: one value per line, '#' starts a comment line. Finite values
// outside [0,1) are wrapped; anything non-numeric raises parse_error with
// the offending line number.
PointSet load_points(std::istream& in, std::string label = {});
PointSet load_points_file(const std::string& path);
void save_points(std::ostream& out, const PointSet& p);
void save_points_file(const std::string& path, const PointSet& p);

} // namespace ppclab
