#include "doctest.h"

#include "mtw/errors.hpp"
#include "mtw/radial.hpp"

#include <random>

using namespace mtw;

namespace {

RadialPoint pt(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return RadialPoint(v);
}

} // namespace

TEST_CASE("radial distance case split") {
    CHECK(radial_distance(pt({1, 0}), pt({2, 0})).as_rational() == Rat(1)); // same ray
    CHECK(radial_distance(pt({1, 0}), pt({0, 1})).as_rational() == Rat(2)); // through origin
    CHECK(radial_distance(pt({1, 0}), pt({1, 0})).as_rational() == Rat(0));
    CHECK(radial_distance(pt({1, 0}), pt({-2, 0})).as_rational() == Rat(3)); // opposite rays
    CHECK(radial_distance(pt({0, 0}), pt({3, 4})).as_rational() == Rat(5));
    // irrational norms stay exact
    CHECK(radial_distance(pt({1, 1}), pt({2, 2})).exact_string() == "sqrt(2)");
    CHECK(radial_distance(pt({1, 1}), pt({1, 0})).exact_string() == "1 + sqrt(2)");
    CHECK_THROWS_AS(radial_distance(pt({1, 0}), RadialPoint({Rat(1), Rat(0), Rat(0)})), Error);
    CHECK_THROWS_AS(RadialPoint({Rat(1)}), Error);
}

TEST_CASE("radial betweenness") {
    CHECK(radial_is_between(pt({1, 0}), pt({0, 0}), pt({0, 1})));  // 2 = 1 + 1
    CHECK(radial_is_between(pt({2, 0}), pt({1, 0}), pt({0, 0})));  // collinear ray
    CHECK(!radial_is_between(pt({1, 0}), pt({3, 0}), pt({0, 1}))); // 2 + 4 != 2
    CHECK(radial_is_between(pt({1, 0}), pt({1, 0}), pt({0, 1})));  // endpoint
    // the origin is between any two points on different rays
    CHECK(radial_is_between(pt({3, 1}), pt({0, 0}), pt({-2, 5})));
}

TEST_CASE("ball width is the radius for every n") {
    CHECK(ball_width(RadialBall(Rat(1)), 3).value == Rat(1));
    CHECK(ball_width(RadialBall(Rat(5, 2)), 1).value == Rat(5, 2));
    CHECK(ball_width(RadialBall(Rat(1)), 100).value == Rat(1));
    CHECK(ball_width(RadialBall(Rat(1), true), 7).value == Rat(1)); // open ball too
    CHECK_THROWS_AS(ball_width(RadialBall(Rat(1)), 0), Error);
    CHECK_THROWS_AS(RadialBall(Rat(0)), Error);
}

TEST_CASE("lower bound witness avoids the generators") {
    RadialBall ball{Rat(1)};
    std::vector<RadialPoint> gens{pt({1, 0}), pt({0, 1})};
    RadialPoint p = ball_width_lower_bound_witness(ball, gens, Rat(1, 4));
    CHECK(p.norm_sq() > Rat(9, 16)); // norm > 3/4
    CHECK(p.norm_sq() <= Rat(1));
    for (const auto& g : gens) {
        CHECK(!collinear_through_origin(p, g));
        CHECK((radial_distance(p, g) - RadicalSum(Rat(3, 4))).sign() > 0);
    }

    // no generators: any point of norm > 1/2 works
    RadialPoint q = ball_width_lower_bound_witness(ball, {}, Rat(1, 2));
    CHECK(q.norm_sq() > Rat(1, 4));

    // three blocked rays at a larger radius
    RadialBall big{Rat(2)};
    std::vector<RadialPoint> three{pt({1, 0}), pt({0, 1}), pt({1, 1})};
    RadialPoint w = ball_width_lower_bound_witness(big, three, Rat(1, 10));
    CHECK(w.norm_sq() > Rat(361, 100)); // norm > 19/10
    for (const auto& g : three) CHECK(!collinear_through_origin(w, g));

    // open balls get a strictly interior witness
    RadialPoint o = ball_width_lower_bound_witness(RadialBall(Rat(1), true), gens, Rat(1, 4));
    CHECK(o.norm_sq() < Rat(1));
}

TEST_CASE("radial metric axioms on random rational points") {
    std::mt19937_64 rng(5);
    auto rnd = [&](int dim) {
        std::vector<Rat> c;
        for (int i = 0; i < dim; ++i)
            c.emplace_back(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3));
        return RadialPoint(c);
    };
    for (int i = 0; i < 300; ++i) {
        int dim = 2 + static_cast<int>(rng() % 2);
        RadialPoint x = rnd(dim), y = rnd(dim), z = rnd(dim);
        CHECK((radial_distance(x, y) - radial_distance(y, x)).sign() == 0);
        CHECK(radial_distance(x, x).sign() == 0);
        if (x != y) CHECK(radial_distance(x, y).sign() > 0);
        CHECK((radial_distance(x, z) + radial_distance(z, y) - radial_distance(x, y)).sign() >= 0);
    }
}
