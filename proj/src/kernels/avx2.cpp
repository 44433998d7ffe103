#include "kernels_impl.hpp"

#ifdef REFUTE_KERNELS_HAVE_AVX2

#include <immintrin.h>

// Compiled with -mavx2 -mfma; must only be entered after the dispatcher has
// checked cpu support. 4-wide lanes, scalar tail.

namespace refute::kernels::detail {

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                              acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void rank2_sub_avx2(double* row, double a, const double* u, double b,
                    const double* v, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_loadu_pd(row + i);
        r = _mm256_fnmadd_pd(va, _mm256_loadu_pd(u + i), r);
        r = _mm256_fnmadd_pd(vb, _mm256_loadu_pd(v + i), r);
        _mm256_storeu_pd(row + i, r);
    }
    for (; i < n; ++i) row[i] -= a * u[i] + b * v[i];
}

}  // namespace refute::kernels::detail

#endif  // REFUTE_KERNELS_HAVE_AVX2
