#include "mtw/radial.hpp"

#include "mtw/errors.hpp"

namespace mtw {

RadialPoint::RadialPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw Error(errc::dimension_mismatch, "radial points need dimension >= 2");
}

Rat RadialPoint::norm_sq() const {
    Rat s(0);
    for (const auto& c : coords_) s += c * c;
    return s;
}

bool RadialPoint::is_origin() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

std::string RadialPoint::key() const {
    std::string out = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += rat_string(coords_[i]);
    }
    return out + ")";
}

RadialBall::RadialBall(Rat r, bool is_open) : radius(std::move(r)), open(is_open) {
    if (radius <= 0) throw Error(errc::invalid_argument, "ball radius must be positive");
}

namespace {

void require_same_dim(const RadialPoint& x, const RadialPoint& y) {
    if (x.dim() != y.dim())
        throw Error(errc::dimension_mismatch, "points of dimension " + std::to_string(x.dim()) +
                                                  " and " + std::to_string(y.dim()));
}

Rat dot(const RadialPoint& x, const RadialPoint& y) {
    Rat s(0);
    for (int i = 0; i < x.dim(); ++i) s += x.coord(i) * y.coord(i);
    return s;
}

} // namespace

bool collinear_through_origin(const RadialPoint& x, const RadialPoint& y) {
    require_same_dim(x, y);
    for (int i = 0; i < x.dim(); ++i)
        for (int j = i + 1; j < x.dim(); ++j)
            if (x.coord(i) * y.coord(j) != x.coord(j) * y.coord(i)) return false;
    return true;
}

bool same_ray(const RadialPoint& x, const RadialPoint& y) {
    return collinear_through_origin(x, y) && dot(x, y) >= 0;
}

RadicalSum radial_distance(const RadialPoint& x, const RadialPoint& y) {
    require_same_dim(x, y);
    if (x == y) return RadicalSum();
    if (collinear_through_origin(x, y)) {
        if (dot(x, y) >= 0) {
            // one ray: ||x-y|| = | ||x|| - ||y|| |
            Rat a = x.norm_sq(), b = y.norm_sq();
            if (a < b) std::swap(a, b);
            return RadicalSum::sqrt_of(a) - RadicalSum::sqrt_of(b);
        }
        // opposite rays: ||x-y|| = ||x|| + ||y||, the through-origin value
    }
    return RadicalSum::sqrt_of(x.norm_sq()) + RadicalSum::sqrt_of(y.norm_sq());
}

bool radial_is_between(const RadialPoint& x, const RadialPoint& z, const RadialPoint& y) {
    RadicalSum lhs = radial_distance(x, y);
    RadicalSum rhs = radial_distance(x, z) + radial_distance(z, y);
    return (lhs - rhs).sign() == 0;
}

BallWidthResult ball_width(const RadialBall& ball, int n) {
    if (n < 1) throw Error(errc::invalid_argument, "width index n must be >= 1");
    std::vector<Rat> origin(2, Rat(0));
    return BallWidthResult{ball.radius, RadialPoint(origin)};
}

RadialPoint ball_width_lower_bound_witness(const RadialBall& ball,
                                           const std::vector<RadialPoint>& generators,
                                           const Rat& eps, int dimension) {
    int dim = generators.empty() ? dimension : generators.front().dim();
    for (const auto& g : generators)
        if (g.dim() != dim) throw Error(errc::dimension_mismatch, "mixed generator dimensions");
    if (dim < 2) throw Error(errc::no_free_ray, "need dimension >= 2 for a free ray");
    if (eps <= 0 || eps >= ball.radius)
        throw Error(errc::invalid_argument, "need 0 < eps < r");

    const Rat& r = ball.radius;

    // candidate rays (1, j, 0, ...): pairwise non-collinear, so at most one
    // is blocked by each generator
    RadialPoint direction = [&] {
        for (long j = 0; j <= static_cast<long>(generators.size()); ++j) {
            std::vector<Rat> u(static_cast<size_t>(dim), Rat(0));
            u[0] = 1;
            u[1] = j;
            RadialPoint cand(u);
            bool blocked = false;
            for (const auto& g : generators)
                if (!g.is_origin() && collinear_through_origin(cand, g)) {
                    blocked = true;
                    break;
                }
            if (!blocked) return cand;
        }
        throw Error(errc::no_free_ray, "no candidate ray avoids the generators");
    }();

    // rational scale t with (r - eps)^2 < t^2 ||u||^2 <= r^2 (strict if open):
    // aim for norm r - eps/2 and verify exactly
    Rat U = direction.norm_sq();
    Rat target = r - eps / 2;
    const Int P = Int(1) << 64;
    Int root = boost::multiprecision::sqrt(boost::multiprecision::numerator(U) *
                                           boost::multiprecision::denominator(U) * P * P);
    // sqrt(U) <= (root+1) * den(U) / (P * den(U)) ... use the upper estimate so
    // t slightly undershoots target/sqrt(U)
    Rat sqrt_upper = Rat(root + 1, P * boost::multiprecision::denominator(U));
    Rat t = target / sqrt_upper;

    std::vector<Rat> coords;
    for (int i = 0; i < dim; ++i) coords.push_back(t * direction.coord(i));
    RadialPoint p(coords);

    // exact verification of the certificate
    Rat nsq = p.norm_sq();
    Rat lo = (r - eps) * (r - eps);
    if (!(nsq > lo)) throw Error(errc::invalid_argument, "witness norm verification failed");
    if (ball.open ? !(nsq < r * r) : !(nsq <= r * r))
        throw Error(errc::invalid_argument, "witness lies outside the ball");
    RadicalSum bound = RadicalSum(Rat(r - eps));
    for (const auto& g : generators) {
        if (!g.is_origin() && collinear_through_origin(p, g))
            throw Error(errc::no_free_ray, "witness ray hits generator " + g.key());
        if (!(radial_distance(p, g) > bound))
            throw Error(errc::invalid_argument,
                        "witness too close to generator " + g.key());
    }
    return p;
}

} // namespace mtw
