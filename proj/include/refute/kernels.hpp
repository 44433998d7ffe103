#pragma once

#include <cstddef>
#include <string_view>

// Dense double-precision kernels used by the eigensolver's inner loops.
// A scalar reference implementation always exists; AVX2 (x86-64) and NEON
// (aarch64) variants are selected once at startup from CPU capabilities.
// All variants compute the same recurrences; they may differ by rounding
// (FMA, reassociation) within a few ulps.

namespace refute::kernels {

enum class Backend { Scalar, Avx2, Neon };

// sum a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// row[i] -= a*u[i] + b*v[i]   (symmetric rank-2 update, one row)
void rank2_sub(double* row, double a, const double* u, double b,
               const double* v, std::size_t n);

Backend active_backend();
std::string_view backend_name();

// Test hook: force a backend. Forcing an unsupported backend is ignored
// and the call returns false.
bool force_backend(Backend b);

}  // namespace refute::kernels
