#include "kernels_impl.hpp"

#ifdef REFUTE_KERNELS_HAVE_NEON

#include <arm_neon.h>

// NEON is baseline on aarch64, so no extra compile flags are needed.
// 2-wide lanes, scalar tail.

namespace refute::kernels::detail {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vy = vld1q_f64(y + i);
        vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
        vst1q_f64(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void rank2_sub_neon(double* row, double a, const double* u, double b,
                    const double* v, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t r = vld1q_f64(row + i);
        r = vfmsq_f64(r, va, vld1q_f64(u + i));
        r = vfmsq_f64(r, vb, vld1q_f64(v + i));
        vst1q_f64(row + i, r);
    }
    for (; i < n; ++i) row[i] -= a * u[i] + b * v[i];
}

}  // namespace refute::kernels::detail

#endif  // REFUTE_KERNELS_HAVE_NEON
