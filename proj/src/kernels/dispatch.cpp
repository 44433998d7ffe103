#include "refute/kernels.hpp"

#include <atomic>

#include "kernels_impl.hpp"

namespace refute::kernels {
namespace {

using detail::axpy_scalar;
using detail::dot_scalar;
using detail::rank2_sub_scalar;

struct Vtable {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*rank2_sub)(double*, double, const double*, double, const double*,
                      std::size_t);
    Backend backend;
};

constexpr Vtable kScalar{dot_scalar, axpy_scalar, rank2_sub_scalar,
                         Backend::Scalar};

#ifdef REFUTE_KERNELS_HAVE_AVX2
constexpr Vtable kAvx2{detail::dot_avx2, detail::axpy_avx2,
                       detail::rank2_sub_avx2, Backend::Avx2};
#endif
#ifdef REFUTE_KERNELS_HAVE_NEON
constexpr Vtable kNeon{detail::dot_neon, detail::axpy_neon,
                       detail::rank2_sub_neon, Backend::Neon};
#endif

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#ifdef REFUTE_KERNELS_HAVE_AVX2
            return __builtin_cpu_supports("avx2") &&
                   __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::Neon:
#ifdef REFUTE_KERNELS_HAVE_NEON
            return true;  // baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

const Vtable* table_for(Backend b) {
    switch (b) {
#ifdef REFUTE_KERNELS_HAVE_AVX2
        case Backend::Avx2:
            return &kAvx2;
#endif
#ifdef REFUTE_KERNELS_HAVE_NEON
        case Backend::Neon:
            return &kNeon;
#endif
        default:
            return &kScalar;
    }
}

const Vtable* pick_default() {
    if (backend_supported(Backend::Avx2)) return table_for(Backend::Avx2);
    if (backend_supported(Backend::Neon)) return table_for(Backend::Neon);
    return &kScalar;
}

std::atomic<const Vtable*> g_active{nullptr};

const Vtable* active() {
    const Vtable* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = pick_default();
        g_active.store(t, std::memory_order_release);
    }
    return t;
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
    return active()->dot(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    active()->axpy(alpha, x, y, n);
}

void rank2_sub(double* row, double a, const double* u, double b,
               const double* v, std::size_t n) {
    active()->rank2_sub(row, a, u, b, v, n);
}

Backend active_backend() { return active()->backend; }

std::string_view backend_name() {
    switch (active_backend()) {
        case Backend::Avx2:
            return "avx2";
        case Backend::Neon:
            return "neon";
        case Backend::Scalar:
            break;
    }
    return "scalar";
}

bool force_backend(Backend b) {
    if (!backend_supported(b)) return false;
    g_active.store(table_for(b), std::memory_order_release);
    return true;
}

}  // namespace refute::kernels
