// AVX2 kernel variants. This TU is the only one compiled with -mavx2; the
// dispatcher in kernels.cpp calls these only after checking cpu support.
#include <cstddef>
#include <immintrin.h>

namespace lsf::kernels {

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double out = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d yi = _mm256_loadu_pd(y + i);
        const __m256d xi = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(yi, _mm256_mul_pd(va, xi)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void rot_avx2(double* x, double* y, std::size_t n, double c, double s) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        const __m256d yi = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_sub_pd(_mm256_mul_pd(vc, xi), _mm256_mul_pd(vs, yi)));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_mul_pd(vs, xi), _mm256_mul_pd(vc, yi)));
    }
    for (; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

} // namespace lsf::kernels
