// SPDX-License-Identifier: Apache-2.0
//
// Dense double-precision kernels used by the LSTM engine's inner loops.
// A scalar reference implementation is always available; an AVX2/FMA
// variant is selected at runtime when the CPU supports it. The two are
// equivalence-tested against each other (summation order differs, so
// results agree to rounding, not bitwise).

#pragma once

#include <cstddef>
#include <cstdint>

namespace pcra::kernels {

enum class Backend { Scalar, Avx2 };

struct Ops {
    // y = M x, M row-major (rows x cols), x: cols, y: rows
    void (*matvec)(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
    // y += M^T x, x: rows, y: cols
    void (*matvec_t_acc)(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
    // M += a b^T, a: rows, b: cols
    void (*outer_acc)(double* m, const double* a, std::size_t rows, const double* b, std::size_t cols);
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // z = x .* y
    void (*mul)(const double* x, const double* y, double* z, std::size_t n);
    // z += x .* y
    void (*mul_acc)(const double* x, const double* y, double* z, std::size_t n);
    // One Adam step over a parameter tensor:
    //   m = b1*m + (1-b1)*g;  v = b2*v + (1-b2)*g^2
    //   w -= lr * (m*inv_bc1) / (sqrt(v*inv_bc2) + eps)
    // inv_bc1/inv_bc2 are the 1/(1-beta^t) bias corrections.
    void (*adam_step)(double* w, double* m, double* v, const double* g, std::size_t n,
                      double b1, double b2, double inv_bc1, double inv_bc2, double lr, double eps);
};

/// Kernels for the active backend.
const Ops& ops();

/// Scalar reference kernels (always available; oracle for equivalence tests).
const Ops& scalar_ops();

Backend active_backend();
void set_backend(Backend b);

/// True when this binary carries the AVX2 variant and the CPU supports it.
bool avx2_available();

const char* backend_name(Backend b);

}  // namespace pcra::kernels
