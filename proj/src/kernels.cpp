#include "littlesinc/kernels.hpp"

#include "littlesinc/errors.hpp"

#include <atomic>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace lsf::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rot_scalar(double* x, double* y, std::size_t n, double c, double s) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

#if defined(__aarch64__)
double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    double out = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void rot_neon(double* x, double* y, std::size_t n, double c, double s) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t xi = vld1q_f64(x + i);
        const float64x2_t yi = vld1q_f64(y + i);
        vst1q_f64(x + i, vsubq_f64(vmulq_f64(vc, xi), vmulq_f64(vs, yi)));
        vst1q_f64(y + i, vaddq_f64(vmulq_f64(vs, xi), vmulq_f64(vc, yi)));
    }
    for (; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}
#endif

bool cpu_has_avx2() {
#if defined(LSF_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend detect() {
    if (cpu_has_avx2()) return Backend::Avx2;
#if defined(__aarch64__)
    return Backend::Neon;
#else
    return Backend::Scalar;
#endif
}

std::atomic<Backend> g_backend{Backend::Auto};

Backend resolved() {
    const Backend b = g_backend.load(std::memory_order_relaxed);
    if (b == Backend::Auto) {
        static const Backend detected = detect();
        return detected;
    }
    return b;
}

} // namespace

#if defined(LSF_HAVE_AVX2_TU)
// Defined in kernels_avx2.cpp, compiled with -mavx2.
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void rot_avx2(double* x, double* y, std::size_t n, double c, double s);
#endif

Backend active_backend() { return resolved(); }

bool backend_available(Backend b) {
    switch (b) {
    case Backend::Auto:
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
        return cpu_has_avx2();
    case Backend::Neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

void set_backend(Backend b) {
    if (!backend_available(b))
        throw capability_error("requested kernel backend is not available on this machine");
    g_backend.store(b, std::memory_order_relaxed);
}

double dot(const double* a, const double* b, std::size_t n) {
    switch (resolved()) {
#if defined(LSF_HAVE_AVX2_TU)
    case Backend::Avx2:
        return dot_avx2(a, b, n);
#endif
#if defined(__aarch64__)
    case Backend::Neon:
        return dot_neon(a, b, n);
#endif
    default:
        return dot_scalar(a, b, n);
    }
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    switch (resolved()) {
#if defined(LSF_HAVE_AVX2_TU)
    case Backend::Avx2:
        axpy_avx2(alpha, x, y, n);
        return;
#endif
#if defined(__aarch64__)
    case Backend::Neon:
        axpy_neon(alpha, x, y, n);
        return;
#endif
    default:
        axpy_scalar(alpha, x, y, n);
    }
}

void rot(double* x, double* y, std::size_t n, double c, double s) {
    switch (resolved()) {
#if defined(LSF_HAVE_AVX2_TU)
    case Backend::Avx2:
        rot_avx2(x, y, n, c, s);
        return;
#endif
#if defined(__aarch64__)
    case Backend::Neon:
        rot_neon(x, y, n, c, s);
        return;
#endif
    default:
        rot_scalar(x, y, n, c, s);
    }
}

} // namespace lsf::kernels
