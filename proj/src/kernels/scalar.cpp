#include "kernels_impl.hpp"

namespace refute::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rank2_sub_scalar(double* row, double a, const double* u, double b,
                      const double* v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) row[i] -= a * u[i] + b * v[i];
}

}  // namespace refute::kernels::detail
