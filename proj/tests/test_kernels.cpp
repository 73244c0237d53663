// SPDX-License-Identifier: Apache-2.0
//
// Scalar/AVX2 kernel equivalence. Summation order differs between the
// backends, so comparisons allow rounding-level tolerance.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pcra/kernels.hpp"
#include "pcra/rng.hpp"

using namespace pcra;
namespace k = pcra::kernels;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double scale = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform(-scale, scale);
    return v;
}

bool close(double a, double b, double tol = 1e-10) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

}  // namespace

TEST_CASE("backend availability and selection") {
    CHECK(k::scalar_ops().dot != nullptr);
    if (k::avx2_available()) {
        k::set_backend(k::Backend::Avx2);
        CHECK(k::active_backend() == k::Backend::Avx2);
        k::set_backend(k::Backend::Scalar);
        CHECK(k::active_backend() == k::Backend::Scalar);
    } else {
        CHECK_THROWS(k::set_backend(k::Backend::Avx2));
    }
}

TEST_CASE("scalar dot reference values") {
    const auto& ops = k::scalar_ops();
    std::vector<double> a{1, 2, 3};
    std::vector<double> b{4, 5, 6};
    CHECK(ops.dot(a.data(), b.data(), 3) == doctest::Approx(32.0));
    CHECK(ops.dot(a.data(), b.data(), 0) == 0.0);
}

TEST_CASE("avx2 kernels match scalar reference") {
    if (!k::avx2_available()) return;
    Rng rng(99);
    const auto& s = k::scalar_ops();
    k::set_backend(k::Backend::Avx2);
    const auto& v = k::ops();

    // odd sizes exercise the remainder loops
    for (std::size_t n : {1u, 3u, 4u, 7u, 8u, 17u, 64u, 129u}) {
        auto a = random_vec(rng, n, 3.0);
        auto b = random_vec(rng, n, 3.0);
        CHECK(close(s.dot(a.data(), b.data(), n), v.dot(a.data(), b.data(), n)));

        auto y1 = random_vec(rng, n);
        auto y2 = y1;
        s.axpy(0.37, a.data(), y1.data(), n);
        v.axpy(0.37, a.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(close(y1[i], y2[i]));

        auto z1 = std::vector<double>(n, 0.0);
        auto z2 = z1;
        s.mul(a.data(), b.data(), z1.data(), n);
        v.mul(a.data(), b.data(), z2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(z1[i] == z2[i]);

        s.mul_acc(a.data(), b.data(), z1.data(), n);
        v.mul_acc(a.data(), b.data(), z2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(close(z1[i], z2[i]));
    }

    for (auto [rows, cols] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 1}, {3, 5}, {8, 8}, {13, 7}, {40, 41}}) {
        auto m = random_vec(rng, rows * cols);
        auto x = random_vec(rng, cols);
        std::vector<double> ys(rows), yv(rows);
        s.matvec(m.data(), rows, cols, x.data(), ys.data());
        v.matvec(m.data(), rows, cols, x.data(), yv.data());
        for (std::size_t i = 0; i < rows; ++i) CHECK(close(ys[i], yv[i]));

        auto xr = random_vec(rng, rows);
        std::vector<double> ts(cols, 0.1), tv(cols, 0.1);
        s.matvec_t_acc(m.data(), rows, cols, xr.data(), ts.data());
        v.matvec_t_acc(m.data(), rows, cols, xr.data(), tv.data());
        for (std::size_t i = 0; i < cols; ++i) CHECK(close(ts[i], tv[i]));

        auto ms = random_vec(rng, rows * cols);
        auto mv = ms;
        auto av = random_vec(rng, rows);
        auto bv = random_vec(rng, cols);
        s.outer_acc(ms.data(), av.data(), rows, bv.data(), cols);
        v.outer_acc(mv.data(), av.data(), rows, bv.data(), cols);
        for (std::size_t i = 0; i < rows * cols; ++i) CHECK(close(ms[i], mv[i]));
    }

    // adam_step: identical state evolution
    for (std::size_t n : {5u, 32u, 67u}) {
        auto w1 = random_vec(rng, n);
        auto w2 = w1;
        std::vector<double> m1(n, 0), v1(n, 0), m2(n, 0), v2(n, 0);
        for (int step = 1; step <= 10; ++step) {
            auto g = random_vec(rng, n, 0.5);
            const double bc1 = 1.0 / (1.0 - std::pow(0.9, step));
            const double bc2 = 1.0 / (1.0 - std::pow(0.999, step));
            s.adam_step(w1.data(), m1.data(), v1.data(), g.data(), n, 0.9, 0.999, bc1, bc2, 1e-3, 1e-8);
            v.adam_step(w2.data(), m2.data(), v2.data(), g.data(), n, 0.9, 0.999, bc1, bc2, 1e-3, 1e-8);
        }
        for (std::size_t i = 0; i < n; ++i) CHECK(close(w1[i], w2[i], 1e-12));
    }

    k::set_backend(k::Backend::Scalar);
}

TEST_CASE("adam_step decreases a quadratic") {
    const auto& ops = k::scalar_ops();
    std::vector<double> w{5.0, -3.0};
    std::vector<double> m(2, 0.0), v(2, 0.0);
    for (int step = 1; step <= 2000; ++step) {
        std::vector<double> g{w[0], w[1]};  // grad of 1/2 ||w||^2
        const double bc1 = 1.0 / (1.0 - std::pow(0.9, step));
        const double bc2 = 1.0 / (1.0 - std::pow(0.999, step));
        ops.adam_step(w.data(), m.data(), v.data(), g.data(), 2, 0.9, 0.999, bc1, bc2, 1e-2, 1e-8);
    }
    CHECK(std::abs(w[0]) < 0.05);
    CHECK(std::abs(w[1]) < 0.05);
}
