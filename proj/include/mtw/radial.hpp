#pragma once

#include "mtw/radical.hpp"

#include <string>
#include <vector>

namespace mtw {

/// A point of R^k (k >= 2) under the radial metric: collinear-through-origin
/// pairs use the Euclidean distance, every other pair routes through the
/// origin. Coordinates are exact rationals; the squared norm is exact.
class RadialPoint {
public:
    explicit RadialPoint(std::vector<Rat> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Rat& coord(int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coords() const { return coords_; }

    Rat norm_sq() const;
    RadicalSum norm() const { return RadicalSum::sqrt_of(norm_sq()); }
    bool is_origin() const;

    bool operator==(const RadialPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const RadialPoint& o) const { return !(*this == o); }

    std::string key() const; // "(1,0,-3/2)"

private:
    std::vector<Rat> coords_;
};

struct RadialBall {
    Rat radius;
    bool open = false;
    RadialBall(Rat r, bool is_open = false);
};

/// x = lambda*y for some real lambda (all 2x2 minors vanish). Zero vectors
/// are collinear with everything.
bool collinear_through_origin(const RadialPoint& x, const RadialPoint& y);
/// Collinear with lambda >= 0, i.e. on one ray from the origin.
bool same_ray(const RadialPoint& x, const RadialPoint& y);

/// ||x-y|| when x = lambda*y, else ||x|| + ||y||. Exact.
RadicalSum radial_distance(const RadialPoint& x, const RadialPoint& y);

/// d(x,y) = d(x,z) + d(z,y), decided exactly.
bool radial_is_between(const RadialPoint& x, const RadialPoint& z, const RadialPoint& y);

struct BallWidthResult {
    Rat value;                 // exactly the radius, independent of n
    RadialPoint upper_witness; // the origin: a hull through it deviates <= r
};

/// Tn-width of the radial ball B_r: exactly r for every n >= 1.
BallWidthResult ball_width(const RadialBall& ball, int n);

/// A point p on a ray avoiding every generator ray with ||p|| > r - eps and
/// p inside the ball; verified against the generators before returning, so
/// d(p, x) > r - eps for every x in conv(generators).
RadialPoint ball_width_lower_bound_witness(const RadialBall& ball,
                                           const std::vector<RadialPoint>& generators,
                                           const Rat& eps, int dimension = 2);

} // namespace mtw
