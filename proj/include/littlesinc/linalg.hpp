#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace lsf {

// Dense symmetric matrix. Construction symmetrizes (A + A^T)/2 and warns on
// stderr when the asymmetry exceeds 1e-12 relative to the largest entry.
struct SymMatrix {
    int dim = 0;
    std::vector<double> entries; // row-major, dim x dim

    SymMatrix() = default;
    SymMatrix(int n, std::vector<double> raw);
    static SymMatrix zero(int n);

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
};

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // row-major dim x dim; COLUMN j is eigenvector j
    int dim = 0;

    double vec(int i, int j) const { return vectors[static_cast<std::size_t>(i) * dim + j]; }
};

// Full spectrum of a symmetric matrix by cyclic Jacobi rotations (fixed
// sweep order, deterministic; cap 100 sweeps). Eigenvectors come out
// orthonormal; values are sorted ascending with vectors permuted to match.
EigenDecomposition sym_eigen(const SymMatrix& A);

// Solve A x = b by LU with partial pivoting. A row-major n x n.
std::vector<double> solve_linear(std::vector<double> A, std::vector<double> b);

// Golden-section refinement on [a, b]; assumes a bracketed minimum.
// Shrinks the bracket until its width is <= tol and returns (mid, f(mid)).
std::pair<double, double> golden_section(const std::function<double(double)>& f, double a,
                                         double b, double tol);

// Bracketed scalar minimization: a deterministic 64-point coarse scan of
// [lo, hi] picks the neighborhood of the lowest probe, then golden-section
// refines it. f must be finite at every probe. Never evaluates f outside
// [lo, hi].
std::pair<double, double> minimize_scalar(const std::function<double(double)>& f, double lo,
                                          double hi, double tol);

} // namespace lsf
