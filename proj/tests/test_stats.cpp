// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pcra/rng.hpp"
#include "pcra/stats.hpp"

using namespace pcra;

namespace {

EmpiricalDist dist_of(std::vector<double> xs) {
    return EmpiricalDist({Feature::Speed, ObjectClass::Vehicle, 1, 1}, std::move(xs));
}

}  // namespace

TEST_CASE("ecdf_eval counts") {
    auto d = dist_of({1, 2, 2, 4});
    CHECK(ecdf_eval(d, 2.0) == doctest::Approx(0.75));
    CHECK(ecdf_eval(d, 0.5) == 0.0);
    CHECK(ecdf_eval(d, 4.0) == 1.0);
    CHECK(ecdf_eval(d, 100.0) == 1.0);
    CHECK(ecdf_eval(d, 1.0) == doctest::Approx(0.25));
}

TEST_CASE("ecdf agrees with brute force on random queries") {
    Rng rng(5);
    for (int set = 0; set < 20; ++set) {
        const std::size_t n = 1 + rng.below(400);
        std::vector<double> xs;
        for (std::size_t i = 0; i < n; ++i) xs.push_back(rng.uniform(-10, 10));
        auto d = dist_of(xs);
        for (int q = 0; q < 200; ++q) {
            const double x = q % 5 == 0 ? xs[rng.below(n)] : rng.uniform(-12, 12);
            std::size_t count = 0;
            for (double v : xs) count += v <= x ? 1 : 0;
            CHECK(ecdf_eval(d, x) == static_cast<double>(count) / static_cast<double>(n));
        }
    }
}

TEST_CASE("dkw_epsilon formula") {
    // frozen from 40-digit evaluation of sqrt(ln(2/alpha)/(2n))
    CHECK(dkw_epsilon(1250, 0.05) == doctest::Approx(0.03841291165279683).epsilon(1e-12));
    CHECK(dkw_epsilon(50, 0.05) == doctest::Approx(0.19206455826398415).epsilon(1e-12));
    CHECK(dkw_epsilon(10, 0.05) == doctest::Approx(0.42946940834673756).epsilon(1e-12));

    // monotone decreasing in n
    double prev = dkw_epsilon(1, 0.05);
    for (std::size_t n = 2; n < 2000; n *= 2) {
        const double e = dkw_epsilon(n, 0.05);
        CHECK(e < prev);
        prev = e;
    }
    CHECK_THROWS(dkw_epsilon(0, 0.05));
    CHECK_THROWS(dkw_epsilon(10, 0.0));
    CHECK_THROWS(dkw_epsilon(10, 1.0));
}

TEST_CASE("confidence band sandwich") {
    Rng rng(17);
    std::vector<double> xs;
    for (int i = 0; i < 150; ++i) xs.push_back(rng.normal(3, 2));
    auto d = dist_of(xs);
    ConfidenceBand band(d, 0.05);
    for (int q = 0; q < 500; ++q) {
        const double x = rng.uniform(-5, 11);
        const double f = ecdf_eval(d, x);
        CHECK(band.lower(x) <= f + 1e-15);
        CHECK(f <= band.upper(x) + 1e-15);
        CHECK(band.lower(x) >= 0.0);
        CHECK(band.upper(x) <= 1.0);
    }
}

TEST_CASE("band_bounds edge cases") {
    // point mass
    auto pm = dist_of(std::vector<double>(25, 7.0));
    auto b = band_bounds(pm, 0.05);
    CHECK(b.lo == 7.0);
    CHECK(b.hi == 7.0);

    // n=10: epsilon 0.4294 exceeds alpha/2, clamps to sample extrema
    std::vector<double> ten{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto d10 = dist_of(ten);
    auto b10 = band_bounds(d10, 0.05);
    CHECK(b10.lo == 1.0);
    CHECK(b10.hi == 10.0);
}

TEST_CASE("band_bounds on large uniform sample") {
    Rng rng(23);
    std::vector<double> xs;
    for (int i = 0; i < 10000; ++i) xs.push_back(rng.next_unit());
    auto d = dist_of(xs);
    auto b = band_bounds(d, 0.05);
    CHECK(b.lo < 0.05);
    CHECK(b.hi > 0.95);
    CHECK(b.lo >= d.min());
    CHECK(b.hi <= d.max());
    CHECK(b.lo <= b.hi);
}

TEST_CASE("recenter translates rigidly") {
    auto d = dist_of({1, 3, 5, 7});  // mean 4
    auto r = recenter(d, 6.0);
    CHECK(r.mean() == doctest::Approx(6.0).epsilon(1e-12));
    REQUIRE(r.n() == 4);
    for (std::size_t i = 0; i + 1 < r.n(); ++i) {
        CHECK(r.samples[i + 1] - r.samples[i] ==
              doctest::Approx(d.samples[i + 1] - d.samples[i]).epsilon(1e-12));
    }
    // identity when predicted equals the mean
    auto same = recenter(d, 4.0);
    for (std::size_t i = 0; i < d.n(); ++i) CHECK(same.samples[i] == doctest::Approx(d.samples[i]));

    // band width invariant under recentering
    Rng rng(31);
    std::vector<double> xs;
    for (int i = 0; i < 400; ++i) xs.push_back(rng.normal(10, 3));
    auto big = dist_of(xs);
    auto bb = band_bounds(big, 0.05);
    auto rb = band_bounds(recenter(big, -2.5), 0.05);
    CHECK(bb.hi - bb.lo == doctest::Approx(rb.hi - rb.lo).epsilon(1e-9));
}

TEST_CASE("inverse_normal_cdf reference quantiles") {
    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(inverse_normal_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-10));
    CHECK(inverse_normal_cdf(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-10));
    CHECK(inverse_normal_cdf(0.8413447460685429) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(inverse_normal_cdf(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-8));
    CHECK_THROWS(inverse_normal_cdf(0.0));
    CHECK_THROWS(inverse_normal_cdf(1.0));
}

// Shapiro-Wilk oracle values computed with an independent AS R94
// implementation on the frozen datasets below.
TEST_CASE("shapiro_wilk frozen oracle vectors") {
    const std::vector<double> g3{1.0, 2.0, 3.5};
    auto r3 = shapiro_wilk(g3);
    REQUIRE(r3.applicable);
    CHECK(r3.w == doctest::Approx(0.9868421052631577).epsilon(1e-6));
    CHECK(r3.p_value == doctest::Approx(0.780440814879016).epsilon(1e-4));

    const std::vector<double> g5{2.71, 3.14, 1.41, 1.73, 2.24};
    auto r5 = shapiro_wilk(g5);
    CHECK(r5.w == doctest::Approx(0.9708395749679296).epsilon(1e-6));
    CHECK(r5.p_value == doctest::Approx(0.880614478355902).epsilon(1e-4));

    const std::vector<double> g12{10.609434, 7.920032, 11.500902, 11.881129, 6.09793, 7.395641,
                                  10.255681, 9.367515, 9.966398,  8.293912,  11.758796, 11.555584};
    auto r12 = shapiro_wilk(g12);
    CHECK(r12.w == doctest::Approx(0.9212486280183856).epsilon(1e-6));
    CHECK(r12.p_value == doctest::Approx(0.2964236325952817).epsilon(1e-4));

    const std::vector<double> e20{1.731327, 0.386895, 1.231586, 0.153773, 0.091577,
                                  0.315179, 0.901199, 0.412985, 1.247386, 0.223576,
                                  1.83797,  1.227086, 0.655796, 0.417087, 0.45332,
                                  0.077077, 0.179632, 0.68532,  0.38868,  1.264207};
    auto r20 = shapiro_wilk(e20);
    CHECK(r20.w == doctest::Approx(0.8829932345090559).epsilon(1e-6));
    CHECK(r20.p_value == doctest::Approx(0.02003536967972499).epsilon(1e-3));

    const std::vector<double> u50{
        0.325825, 0.370460, 0.469556, 0.189471, 0.129922, 0.475705, 0.226909, 0.669814, 0.437152,
        0.832678, 0.700265, 0.312367, 0.832260, 0.804764, 0.387478, 0.288328, 0.682496, 0.139752,
        0.199908, 0.007362, 0.786924, 0.664851, 0.705165, 0.780729, 0.458916, 0.568741, 0.139797,
        0.114530, 0.668403, 0.471096, 0.565236, 0.764999, 0.634718, 0.553579, 0.559207, 0.303950,
        0.030818, 0.436717, 0.214585, 0.408529, 0.853403, 0.233939, 0.058303, 0.281384, 0.293594,
        0.661917, 0.557032, 0.783898, 0.664314, 0.406387};
    auto r50 = shapiro_wilk(u50);
    CHECK(r50.w == doctest::Approx(0.9573811916566078).epsilon(1e-6));
    CHECK(r50.p_value == doctest::Approx(0.0690576723447764).epsilon(1e-3));

    const std::vector<double> ln80{
        1.113915, 3.704509, 0.201441, 0.286033, 0.201639, 0.451971, 1.552143, 1.689086, 1.318209,
        0.243469, 0.099251, 1.055858, 0.623893, 1.583101, 2.017691, 1.148253, 2.138561, 1.257608,
        1.699042, 0.494270, 0.835595, 1.217471, 2.271700, 0.674529, 1.683992, 0.766563, 0.889103,
        2.292216, 0.136278, 0.273495, 0.227141, 0.096945, 0.507497, 2.115802, 0.752101, 1.218707,
        2.971948, 3.772305, 0.933198, 3.871283, 1.096504, 0.432835, 0.551893, 0.227516, 0.411423,
        0.699061, 2.233534, 5.588829, 0.251030, 1.481163, 0.353262, 1.607527, 0.877142, 0.160268,
        2.530197, 0.546074, 0.586314, 0.343093, 0.519814, 1.534018, 0.827584, 1.389108, 1.436087,
        3.745899, 0.709790, 0.228354, 2.907293, 0.717855, 3.048326, 1.467231, 0.877097, 1.417332,
        7.035808, 7.980336, 1.071845, 1.173735, 2.933629, 0.429274, 1.395245, 0.974469};
    auto r80 = shapiro_wilk(ln80);
    CHECK(r80.w == doctest::Approx(0.7537893184472099).epsilon(1e-6));
    CHECK(r80.p_value < 1e-8);  // oracle: 2.9e-10
}

TEST_CASE("shapiro_wilk not-applicable cases") {
    CHECK_FALSE(shapiro_wilk(std::vector<double>{1.0, 2.0}).applicable);
    CHECK_FALSE(shapiro_wilk(std::vector<double>(30, 4.2)).applicable);
    std::vector<double> huge(5001, 0.0);
    CHECK_FALSE(shapiro_wilk(huge).applicable);
}

TEST_CASE("shapiro_wilk separates normal from exponential") {
    Rng rng(41);
    int normal_rejects = 0;
    int exp_rejects = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> gauss;
        std::vector<double> expo;
        for (int i = 0; i < 100; ++i) gauss.push_back(rng.normal(0, 1));
        for (int i = 0; i < 100; ++i) expo.push_back(-std::log(1.0 - rng.next_unit()));
        if (shapiro_wilk(gauss).p_value <= 0.05) ++normal_rejects;
        if (shapiro_wilk(expo).p_value <= 0.05) ++exp_rejects;
    }
    CHECK(normal_rejects < trials / 4);       // near-nominal type-I error
    CHECK(exp_rejects > trials * 9 / 10);     // high power at n=100
}
