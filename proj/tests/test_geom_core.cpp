#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "capabp/cap_geometry.hpp"
#include "capabp/convex_body.hpp"
#include "capabp/errors.hpp"
#include "capabp/rng.hpp"

using namespace capabp;

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
    // recursion w_N = w_{N-2} * 2 pi / N
    for (int n = 3; n <= 8; ++n)
        CHECK(unit_ball_volume(n) ==
              doctest::Approx(unit_ball_volume(n - 2) * 2.0 * M_PI / n).epsilon(1e-13));
    CHECK(unit_ball_volume(4) == doctest::Approx(M_PI * M_PI / 2.0).epsilon(1e-14));
}

TEST_CASE("unit ball volume N=4 against Monte Carlo") {
    Rng rng(20240917);
    const std::int64_t n = 2'000'000;
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) {
            const double x = rng.uniform(-1.0, 1.0);
            s += x * x;
        }
        if (s <= 1.0) ++hits;
    }
    const double p = double(hits) / double(n);
    const double est = p * 16.0;
    const double hw = 2.576 * std::sqrt(p * (1 - p) / n) * 16.0;
    CHECK(std::abs(est - unit_ball_volume(4)) < 3.0 * hw);
}

TEST_CASE("cap volumes at reference points") {
    CHECK(cap_volume_unit(0.0, 2) == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    const double expected = std::acos(0.5) - 0.5 * std::sqrt(0.75);
    CHECK(cap_volume_unit(0.5, 2) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(cap_volume_unit(0.0, 3) == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(cap_volume_unit(1.0, 2), DomainError);
    CHECK_THROWS_AS(cap_volume_unit(-1.5, 3), DomainError);
}

TEST_CASE("cap volume monotone in lambda and full-ball limit") {
    for (int dim : {2, 3, 4}) {
        double prev = cap_volume_unit(-0.999999, dim);
        CHECK(std::abs(prev - unit_ball_volume(dim)) < 1e-5);
        for (int k = 1; k <= 100; ++k) {
            const double lam = -0.999999 + k * (1.999998 / 100.0);
            const double v = cap_volume_unit(lam, dim);
            CHECK(v < prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("cap volume scaling in the radius") {
    for (int dim : {2, 3, 4}) {
        for (double lam : {-0.7, -0.2, 0.0, 0.4, 0.8}) {
            for (double r : {0.3, 1.7, 2.5}) {
                const double full = cap_volume({lam, r, dim});
                const double scaled = std::pow(r, dim) * cap_volume_unit(lam, dim);
                CHECK(full == doctest::Approx(scaled).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("sphere cap surface measures") {
    CHECK(cap_surface_measure(0.0, 2, CapSide::below) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(cap_surface_measure(-1.0, 2, CapSide::below) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cap_surface_measure(-1.0, 5, CapSide::below) == doctest::Approx(0.0).epsilon(1e-12));
    // exact zone area in N=3: 2 pi (1 + lambda)
    CHECK(cap_surface_measure(0.3, 3, CapSide::below) ==
          doctest::Approx(2.0 * M_PI * 1.3).epsilon(1e-10));
    for (int dim : {2, 3, 4, 5}) {
        for (double lam : {-0.9, -0.3, 0.0, 0.2, 0.8}) {
            const double b = cap_surface_measure(lam, dim, CapSide::below);
            const double a = cap_surface_measure(lam, dim, CapSide::above);
            CHECK(b + a == doctest::Approx(sphere_area(dim)).epsilon(1e-9));
        }
    }
}

TEST_CASE("outward normals on the four body kinds") {
    const auto ball = ConvexBody::make_ball(Vec::zero(3), 1.0);
    const Vec e1 = Vec::axis(0, 3);
    const Vec n1 = ball.outward_normal(e1);
    CHECK(dist(n1, e1) < 1e-12);

    const auto half = ConvexBody::make_halfspace(Vec::axis(2, 3), 0.0);
    const Vec x{0.3, -0.4, 0.0};
    CHECK(dist(half.outward_normal(x), Vec::axis(2, 3)) < 1e-12);

    const double a = 80.0 * M_PI / 180.0;
    const Vec w1{std::cos(a), std::sin(a)};
    const Vec w2{-std::cos(a), std::sin(a)};
    const auto wedge = ConvexBody::make_wedge({w1, 0.0}, {w2, 0.0}, Vec{0.0, -1.0});
    // point strictly on face 0
    const Vec t{std::sin(a), -std::cos(a)};
    CHECK(dist(wedge.outward_normal(t, 0), w1) < 1e-12);
    CHECK(dist(wedge.outward_normal(t), w1) < 1e-12);  // single active face
    CHECK_THROWS_AS(wedge.outward_normal(Vec{0.0, 0.0}), AmbiguityError);  // the ridge
    CHECK_THROWS_AS(wedge.outward_normal(Vec{5.0, 5.0}), DomainError);     // off boundary
}

TEST_CASE("support inequality for sampled boundary normals") {
    Rng rng(7);
    std::vector<ConvexBody> bodies;
    bodies.push_back(ConvexBody::make_ball(Vec{0.2, -0.1, 0.3}, 1.3));
    bodies.push_back(ConvexBody::make_halfspace(normalized(Vec{1.0, 2.0, -1.0}), 0.4));
    bodies.push_back(ConvexBody::make_wedge_2d(0.5 * M_PI));
    {
        std::vector<Halfspace> faces;
        for (int k = 0; k < 7; ++k) faces.push_back({rng.unit_vector(3), 1.0});
        bodies.push_back(ConvexBody::make_polytope(faces, Vec::zero(3)));
    }
    for (const auto& body : bodies) {
        for (int rep = 0; rep < 16; ++rep) {
            const auto bs = body.sample_boundary(rng);
            CHECK(body.on_boundary(bs.point, 1e-9));
            for (int s = 0; s < 1000 / 16 + 1; ++s) {
                const Vec y = body.sample_point(rng);
                CHECK(dot(bs.normal, y - bs.point) <= 1e-12);
            }
        }
    }
}

TEST_CASE("kuratowski distance on closed forms") {
    const auto b1 = ConvexBody::make_ball(Vec::zero(2), 1.0);
    const auto b11 = ConvexBody::make_ball(Vec::zero(2), 1.1);
    const Vec lo{-2.0, -2.0}, hi{2.0, 2.0};
    CHECK(kuratowski_distance(b1, b1, lo, hi, 32) == doctest::Approx(0.0));
    CHECK(kuratowski_distance(b1, b11, lo, hi, 64) == doctest::Approx(0.1).epsilon(1e-9));

    const auto h0 = ConvexBody::make_halfspace(Vec::axis(1, 2), 0.0);
    const auto h5 = ConvexBody::make_halfspace(Vec::axis(1, 2), 0.05);
    const Vec lo1{-1.0, -1.0}, hi1{1.0, 1.0};
    CHECK(kuratowski_distance(h0, h5, lo1, hi1, 32) == doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("kuratowski triangle inequality on random bodies") {
    Rng rng(99);
    const Vec lo{-2.0, -2.0}, hi{2.0, 2.0};
    for (int rep = 0; rep < 5; ++rep) {
        auto mk = [&](int which) -> ConvexBody {
            if (which == 0)
                return ConvexBody::make_ball(Vec{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)},
                                             rng.uniform(0.5, 1.5));
            if (which == 1)
                return ConvexBody::make_halfspace(rng.unit_vector(2), rng.uniform(-0.3, 0.3));
            std::vector<Halfspace> faces;
            for (int k = 0; k < 5; ++k) faces.push_back({rng.unit_vector(2), 1.0});
            return ConvexBody::make_polytope(faces, Vec::zero(2));
        };
        const auto A = mk(rng.uniform_int(3));
        const auto B = mk(rng.uniform_int(3));
        const auto C = mk(rng.uniform_int(3));
        const double ab = kuratowski_distance(A, B, lo, hi, 24);
        const double bc = kuratowski_distance(B, C, lo, hi, 24);
        const double ac = kuratowski_distance(A, C, lo, hi, 24);
        CHECK(ac <= ab + bc + 1e-9);
    }
}

TEST_CASE("distance of polytope matches ball/halfspace closed forms") {
    Rng rng(3);
    // square [-1,1]^2 as a polytope
    std::vector<Halfspace> faces{{Vec{1.0, 0.0}, 1.0},
                                 {Vec{-1.0, 0.0}, 1.0},
                                 {Vec{0.0, 1.0}, 1.0},
                                 {Vec{0.0, -1.0}, 1.0}};
    const auto sq = ConvexBody::make_polytope(faces, Vec::zero(2));
    CHECK(sq.distance(Vec{2.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sq.distance(Vec{2.0, 2.0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sq.distance(Vec{0.5, -0.25}) == doctest::Approx(0.0));
    for (int i = 0; i < 200; ++i) {
        const Vec x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const double dx = std::max(std::abs(x[0]) - 1.0, 0.0);
        const double dy = std::max(std::abs(x[1]) - 1.0, 0.0);
        CHECK(sq.distance(x) == doctest::Approx(std::hypot(dx, dy)).epsilon(1e-10));
    }
}
