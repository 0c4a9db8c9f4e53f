#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel double-precision kernels behind the numeric code paths.
// Every operation has a scalar reference implementation and, where the
// hardware supports it, an AVX2 or NEON variant selected once at runtime.
//
// The SIMD variants are written to be bit-identical to the scalar reference:
// matrix products vectorize across output columns (each element accumulates
// in the same order as the scalar loop), and dot products use a fixed
// four-accumulator scheme in every variant.  Equivalence tests assert exact
// equality, and results never depend on which variant was dispatched.

namespace stance::kernels {

struct Dispatch {
    const char* name;

    // C[m x n] = A[m x k] * B[k x n], all row-major, C overwritten.
    void (*matmul)(double* c, const double* a, const double* b,
                   std::size_t m, std::size_t k, std::size_t n);

    // C[m x n] += A[m x k] * B[n x k]^T
    void (*matmul_nt_acc)(double* c, const double* a, const double* b,
                          std::size_t m, std::size_t k, std::size_t n);

    // C[k x n] += A[m x k]^T * B[m x n]
    void (*matmul_tn_acc)(double* c, const double* a, const double* b,
                          std::size_t m, std::size_t k, std::size_t n);

    double (*dot)(const double* a, const double* b, std::size_t n);

    void (*add)(double* dst, const double* a, const double* b, std::size_t n);
    void (*sub)(double* dst, const double* a, const double* b, std::size_t n);
    void (*mul)(double* dst, const double* a, const double* b, std::size_t n);

    // y += alpha * x
    void (*axpy)(double* y, double alpha, const double* x, std::size_t n);

    // dst = alpha * x
    void (*scale)(double* dst, double alpha, const double* x, std::size_t n);
};

const Dispatch& scalar();

// Variant by name ("scalar", "avx2", "neon"); nullptr when not compiled in
// or not supported by the running CPU.
const Dispatch* by_name(std::string_view name);

// Best supported variant, honouring the STANCE_KERNELS environment override.
// Selected once; subsequent calls return the same table.
const Dispatch& active();

// Test hook: replace the active table (returns the previous one).
const Dispatch& force(const Dispatch& table);

} // namespace stance::kernels
