#pragma once

#include <cstddef>

namespace lsf::kernels {

// Data-parallel inner loops used by the dense solvers and quadrature sums.
// A scalar reference implementation always exists; an AVX2 variant (x86) or
// NEON variant (aarch64) is picked at runtime when the CPU supports it.
enum class Backend { Auto, Scalar, Avx2, Neon };

// Backend actually executing right now (never Auto).
Backend active_backend();

// Override the dispatch, mainly so tests can compare variants on the same
// inputs. Throws lsf::capability_error if the requested backend is not
// available on this machine. Backend::Auto restores runtime detection.
void set_backend(Backend b);

// True if the given backend can run on this build/CPU.
bool backend_available(Backend b);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// Plane rotation of two rows: (x[i], y[i]) <- (c*x[i] - s*y[i], s*x[i] + c*y[i])
void rot(double* x, double* y, std::size_t n, double c, double s);

} // namespace lsf::kernels
