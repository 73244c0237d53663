// SPDX-License-Identifier: Apache-2.0

#include "pcra/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace pcra::kernels {

namespace scalar {

void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = m + r * cols;
        double acc = 0.0;
        for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
}

void matvec_t_acc(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = m + r * cols;
        const double xr = x[r];
        for (std::size_t c = 0; c < cols; ++c) y[c] += xr * row[c];
    }
}

void outer_acc(double* m, const double* a, std::size_t rows, const double* b, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        double* row = m + r * cols;
        const double ar = a[r];
        for (std::size_t c = 0; c < cols; ++c) row[c] += ar * b[c];
    }
}

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void mul(const double* x, const double* y, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] * y[i];
}

void mul_acc(const double* x, const double* y, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] += x[i] * y[i];
}

void adam_step(double* w, double* m, double* v, const double* g, std::size_t n,
               double b1, double b2, double inv_bc1, double inv_bc2, double lr, double eps) {
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = b1 * m[i] + (1.0 - b1) * g[i];
        v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
        double mhat = m[i] * inv_bc1;
        double vhat = v[i] * inv_bc2;
        w[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
}

}  // namespace scalar

namespace {

const Ops kScalarOps = {
    &scalar::matvec, &scalar::matvec_t_acc, &scalar::outer_acc,
    &scalar::dot,    &scalar::axpy,         &scalar::mul,
    &scalar::mul_acc, &scalar::adam_step,
};

#if PCRA_HAVE_AVX2
bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#else
bool cpu_has_avx2() { return false; }
#endif

Backend pick_default() {
    if (const char* env = std::getenv("PCRA_KERNEL_BACKEND")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (!cpu_has_avx2()) throw std::runtime_error("PCRA_KERNEL_BACKEND=avx2 but CPU lacks AVX2/FMA");
            return Backend::Avx2;
        }
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

Backend g_backend = pick_default();

}  // namespace

#if PCRA_HAVE_AVX2
const Ops& avx2_ops();  // kernels_avx2.cpp
#endif

const Ops& scalar_ops() { return kScalarOps; }

const Ops& ops() {
#if PCRA_HAVE_AVX2
    if (g_backend == Backend::Avx2) return avx2_ops();
#endif
    return kScalarOps;
}

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !cpu_has_avx2()) {
        throw std::runtime_error("AVX2 backend requested but not available");
    }
    g_backend = b;
}

bool avx2_available() { return cpu_has_avx2(); }

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

}  // namespace pcra::kernels
