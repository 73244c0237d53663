// SPDX-License-Identifier: Apache-2.0
//
// AVX2/FMA kernel variants. Compiled with -mavx2 -mfma in this translation
// unit only; callers must check avx2_available() before dispatching here.

#include "pcra/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace pcra::kernels {

namespace avx2 {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void matvec(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) y[r] = dot(m + r * cols, x, cols);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void matvec_t_acc(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) axpy(x[r], m + r * cols, y, cols);
}

void outer_acc(double* m, const double* a, std::size_t rows, const double* b, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) axpy(a[r], b, m + r * cols, cols);
}

void mul(const double* x, const double* y, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(z + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) z[i] = x[i] * y[i];
}

void mul_acc(const double* x, const double* y, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vz = _mm256_loadu_pd(z + i);
        vz = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), vz);
        _mm256_storeu_pd(z + i, vz);
    }
    for (; i < n; ++i) z[i] += x[i] * y[i];
}

void adam_step(double* w, double* m, double* v, const double* g, std::size_t n,
               double b1, double b2, double inv_bc1, double inv_bc2, double lr, double eps) {
    const __m256d vb1 = _mm256_set1_pd(b1);
    const __m256d vb2 = _mm256_set1_pd(b2);
    const __m256d vc1 = _mm256_set1_pd(1.0 - b1);
    const __m256d vc2 = _mm256_set1_pd(1.0 - b2);
    const __m256d vibc1 = _mm256_set1_pd(inv_bc1);
    const __m256d vibc2 = _mm256_set1_pd(inv_bc2);
    const __m256d vlr = _mm256_set1_pd(lr);
    const __m256d veps = _mm256_set1_pd(eps);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vg = _mm256_loadu_pd(g + i);
        __m256d vm = _mm256_fmadd_pd(vb1, _mm256_loadu_pd(m + i), _mm256_mul_pd(vc1, vg));
        __m256d vv = _mm256_fmadd_pd(vb2, _mm256_loadu_pd(v + i),
                                     _mm256_mul_pd(vc2, _mm256_mul_pd(vg, vg)));
        _mm256_storeu_pd(m + i, vm);
        _mm256_storeu_pd(v + i, vv);
        __m256d mhat = _mm256_mul_pd(vm, vibc1);
        __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(_mm256_mul_pd(vv, vibc2)), veps);
        __m256d vw = _mm256_loadu_pd(w + i);
        vw = _mm256_sub_pd(vw, _mm256_div_pd(_mm256_mul_pd(vlr, mhat), denom));
        _mm256_storeu_pd(w + i, vw);
    }
    for (; i < n; ++i) {
        m[i] = b1 * m[i] + (1.0 - b1) * g[i];
        v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
        w[i] -= lr * (m[i] * inv_bc1) / (std::sqrt(v[i] * inv_bc2) + eps);
    }
}

}  // namespace avx2

const Ops& avx2_ops() {
    static const Ops ops = {
        &avx2::matvec, &avx2::matvec_t_acc, &avx2::outer_acc,
        &avx2::dot,    &avx2::axpy,         &avx2::mul,
        &avx2::mul_acc, &avx2::adam_step,
    };
    return ops;
}

}  // namespace pcra::kernels
