#pragma once

#include <cstddef>

// Per-backend entry points. Each backend lives in its own translation unit
// so the vectorised ones can be compiled with their ISA flags while the
// rest of the project stays baseline.

namespace refute::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void rank2_sub_scalar(double* row, double a, const double* u, double b,
                      const double* v, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
#define REFUTE_KERNELS_HAVE_AVX2 1
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void rank2_sub_avx2(double* row, double a, const double* u, double b,
                    const double* v, std::size_t n);
#endif

#if defined(__aarch64__)
#define REFUTE_KERNELS_HAVE_NEON 1
double dot_neon(const double* a, const double* b, std::size_t n);
void axpy_neon(double alpha, const double* x, double* y, std::size_t n);
void rank2_sub_neon(double* row, double a, const double* u, double b,
                    const double* v, std::size_t n);
#endif

}  // namespace refute::kernels::detail
