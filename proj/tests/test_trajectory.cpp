// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pcra/rng.hpp"
#include "pcra/trajectory.hpp"

using namespace pcra;

namespace {

Trajectory make_traj(std::initializer_list<Point> pts, double dt = 0.2,
                     ObjectClass cls = ObjectClass::Vehicle) {
    Trajectory t;
    t.object_class = cls;
    double time = 0.0;
    for (const auto& p : pts) {
        t.samples.push_back({time, p});
        time += dt;
    }
    return t;
}

}  // namespace

TEST_CASE("points_to_velocities basic directions") {
    auto v1 = points_to_velocities(std::vector<Point>{{0, 0}, {0, 1}});
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].speed == doctest::Approx(1.0));
    CHECK(v1[0].degree == doctest::Approx(0.0));

    auto v2 = points_to_velocities(std::vector<Point>{{0, 0}, {1, 0}});
    CHECK(v2[0].speed == doctest::Approx(1.0));
    CHECK(v2[0].degree == doctest::Approx(90.0));

    auto v3 = points_to_velocities(std::vector<Point>{{0, 0}, {3, 4}});
    CHECK(v3[0].speed == doctest::Approx(5.0));
    CHECK(v3[0].degree == doctest::Approx(36.8699).epsilon(1e-4));
    // roundtrip closes the loop
    auto pts = velocities_to_points({0, 0}, v3);
    CHECK(pts[0].x == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(pts[0].y == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("points_to_velocities rejects short input") {
    CHECK_THROWS_AS(points_to_velocities(std::vector<Point>{{0, 0}}), std::invalid_argument);
}

TEST_CASE("velocities_to_points examples") {
    auto p1 = velocities_to_points({2, 3}, std::vector<VelocityVector>{{2.0, 180.0, false}});
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p1[0].y == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(velocities_to_points({0, 0}, std::vector<VelocityVector>{}).empty());

    auto p2 = velocities_to_points(
        {0, 0}, std::vector<VelocityVector>{{1.0, 90.0, false}, {1.0, 90.0, false}});
    CHECK(p2[0].x == doctest::Approx(1.0));
    CHECK(p2[0].y == doctest::Approx(0.0));
    CHECK(p2[1].x == doctest::Approx(2.0));
    CHECK(p2[1].y == doctest::Approx(0.0));
}

TEST_CASE("roundtrip over random trajectories") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Point> pts;
        const int n = 2 + static_cast<int>(rng.below(30));
        Point cur{rng.uniform(-100, 100), rng.uniform(-100, 100)};
        pts.push_back(cur);
        for (int i = 1; i < n; ++i) {
            cur.x += rng.uniform(-5, 5);
            cur.y += rng.uniform(-5, 5);
            pts.push_back(cur);
        }
        auto vels = points_to_velocities(pts);
        auto back = velocities_to_points(pts.front(), vels);
        REQUIRE(back.size() == pts.size() - 1);
        for (std::size_t i = 0; i < back.size(); ++i) {
            CHECK(std::abs(back[i].x - pts[i + 1].x) < 1e-9);
            CHECK(std::abs(back[i].y - pts[i + 1].y) < 1e-9);
        }
        // decomposition norm and degree range
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double dx = pts[i + 1].x - pts[i].x;
            const double dy = pts[i + 1].y - pts[i].y;
            CHECK(std::abs(vels[i].speed * vels[i].speed - (dx * dx + dy * dy)) < 1e-9);
            CHECK(vels[i].degree >= 0.0);
            CHECK(vels[i].degree < 360.0);
        }
    }
}

TEST_CASE("low_pass_smooth") {
    std::vector<double> constant{5, 5, 5, 5};
    CHECK(low_pass_smooth(constant, 3) == constant);

    std::vector<double> spike{0, 0, 9, 0, 0};
    auto sm = low_pass_smooth(spike, 3);
    REQUIRE(sm.size() == 5);
    CHECK(sm[0] == doctest::Approx(0.0));
    CHECK(sm[1] == doctest::Approx(3.0));
    CHECK(sm[2] == doctest::Approx(3.0));
    CHECK(sm[3] == doctest::Approx(3.0));
    CHECK(sm[4] == doctest::Approx(0.0));

    std::vector<double> anything{3.5, -2, 8, 0.25};
    CHECK(low_pass_smooth(anything, 1) == anything);

    CHECK_THROWS(low_pass_smooth(std::vector<double>{}, 1));
    CHECK_THROWS(low_pass_smooth(anything, 5));
}

TEST_CASE("low_pass_smooth stays within input range") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> series;
        const int n = 1 + static_cast<int>(rng.below(40));
        for (int i = 0; i < n; ++i) series.push_back(rng.uniform(-10, 10));
        const int window = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        auto out = low_pass_smooth(series, window);
        const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
        for (double v : out) {
            CHECK(v >= *lo - 1e-12);
            CHECK(v <= *hi + 1e-12);
        }
    }
}

TEST_CASE("shift_to_common_origin") {
    auto t1 = make_traj({{3, 3}, {4, 3}});
    auto t2 = make_traj({{0, 0}, {1, 1}, {2, 0}});
    auto shifted = shift_to_common_origin(std::vector<Trajectory>{t1, t2});

    CHECK(shifted[0].point(0) == Point{0, 0});
    CHECK(shifted[0].point(1) == Point{1, 0});
    CHECK(shifted[1].point(0) == Point{0, 0});

    // pairwise step distances preserved exactly
    for (std::size_t k = 0; k < 2; ++k) {
        const Trajectory& before = k == 0 ? t1 : t2;
        const Trajectory& after = shifted[k];
        for (std::size_t i = 0; i + 1 < before.size(); ++i) {
            const double db = std::hypot(before.point(i + 1).x - before.point(i).x,
                                         before.point(i + 1).y - before.point(i).y);
            const double da = std::hypot(after.point(i + 1).x - after.point(i).x,
                                         after.point(i + 1).y - after.point(i).y);
            CHECK(db == da);
        }
    }
}

TEST_CASE("displacement_over_horizon") {
    // straight motion 1 unit/step at 5 Hz
    Trajectory t;
    t.object_class = ObjectClass::Vehicle;
    for (int i = 0; i <= 10; ++i) t.samples.push_back({i * 0.2, {static_cast<double>(i), 0.0}});

    auto d = displacement_over_horizon(t, 0, 1.0);
    REQUIRE(d.has_value());
    CHECK(d->speed == doctest::Approx(5.0));
    CHECK(d->degree == doctest::Approx(90.0));

    // stationary object: zero displacement, bearing 0 by convention
    Trajectory still;
    still.object_class = ObjectClass::Pedestrian;
    for (int i = 0; i <= 10; ++i) still.samples.push_back({i * 0.2, {1.0, 1.0}});
    auto d0 = displacement_over_horizon(still, 0, 1.0);
    REQUIRE(d0.has_value());
    CHECK(d0->speed == 0.0);
    CHECK(d0->degree == 0.0);
    CHECK(d0->zero_displacement);

    // runs off the end
    CHECK_FALSE(displacement_over_horizon(t, 10, 1.0).has_value());
    CHECK_FALSE(displacement_over_horizon(t, 6, 1.0).has_value());

    // non-integral horizon
    CHECK_THROWS_AS(displacement_over_horizon(t, 0, 0.3), std::invalid_argument);
}

TEST_CASE("resample aligns to the rate grid") {
    Trajectory t;
    t.object_class = ObjectClass::Vehicle;
    // 25 Hz source, linear in x
    for (int i = 0; i <= 100; ++i) t.samples.push_back({0.013 + i * 0.04, {i * 0.1, 2.0}});
    auto r = resample(t, 5.0);
    REQUIRE(r.size() >= 2);
    const double dt = r.step_seconds();
    CHECK(dt == doctest::Approx(0.2));
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double k = r.time(i) / 0.2;
        CHECK(std::abs(k - std::round(k)) < 1e-9);
    }
    // linearity preserved under interpolation
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double expect_x = (r.time(i) - 0.013) / 0.04 * 0.1;
        CHECK(r.point(i).x == doctest::Approx(expect_x).epsilon(1e-9));
    }
}

TEST_CASE("unwrap_degrees removes artificial jumps") {
    std::vector<VelocityVector> vels{
        {1.0, 350.0, false}, {1.0, 355.0, false}, {1.0, 2.0, false}, {1.0, 8.0, false}};
    auto un = unwrap_degrees(vels);
    CHECK(un[0] == doctest::Approx(350.0));
    CHECK(un[1] == doctest::Approx(355.0));
    CHECK(un[2] == doctest::Approx(362.0));
    CHECK(un[3] == doctest::Approx(368.0));

    // zero-displacement carries the previous bearing
    std::vector<VelocityVector> with_zero{
        {1.0, 10.0, false}, {0.0, 0.0, true}, {1.0, 14.0, false}};
    auto un2 = unwrap_degrees(with_zero);
    CHECK(un2[1] == doctest::Approx(10.0));
    CHECK(un2[2] == doctest::Approx(14.0));
}

TEST_CASE("scene time support overlap") {
    Scene s;
    s.scene_id = "s";
    s.vehicle = make_traj({{0, 0}, {1, 0}, {2, 0}});
    s.pedestrian = make_traj({{5, 5}, {5, 6}});
    s.pedestrian.object_class = ObjectClass::Pedestrian;
    CHECK(s.time_supports_overlap());

    for (auto& sample : s.pedestrian.samples) sample.time_s += 100.0;
    CHECK_FALSE(s.time_supports_overlap());
}

TEST_CASE("wrap_degree range") {
    CHECK(wrap_degree(360.0) == 0.0);
    CHECK(wrap_degree(-90.0) == doctest::Approx(270.0));
    CHECK(wrap_degree(725.0) == doctest::Approx(5.0));
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        const double d = wrap_degree(rng.uniform(-2000, 2000));
        CHECK(d >= 0.0);
        CHECK(d < 360.0);
    }
}
