#include "littlesinc/linalg.hpp"

#include "littlesinc/errors.hpp"
#include "littlesinc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

namespace lsf {

SymMatrix::SymMatrix(int n, std::vector<double> raw) {
    if (n < 1 || raw.size() != static_cast<std::size_t>(n) * n)
        throw domain_error("SymMatrix: entry count must be dim*dim with dim >= 1");
    dim = n;
    entries = std::move(raw);
    double amax = 0.0, asym = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            amax = std::max({amax, std::abs(at(i, j)), std::abs(at(j, i))});
            asym = std::max(asym, std::abs(at(i, j) - at(j, i)));
        }
    for (int i = 0; i < n; ++i) amax = std::max(amax, std::abs(at(i, i)));
    if (asym > 1e-12 * std::max(amax, 1e-300))
        std::fprintf(stderr, "W_ASYMMETRY SymMatrix: input asymmetry %.3e exceeds 1e-12 relative; symmetrizing\n",
                     asym / std::max(amax, 1e-300));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (at(i, j) + at(j, i));
            at(i, j) = v;
            at(j, i) = v;
        }
}

SymMatrix SymMatrix::zero(int n) {
    SymMatrix m;
    m.dim = n;
    m.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
    return m;
}

EigenDecomposition sym_eigen(const SymMatrix& A) {
    const int n = A.dim;
    if (n < 1) throw domain_error("sym_eigen: empty matrix");
    for (double v : A.entries)
        if (!std::isfinite(v)) throw domain_error("sym_eigen: non-finite matrix entry");

    std::vector<double> a = A.entries;       // working copy, kept symmetric
    std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0); // rows are eigenvectors
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i) * n + i] = 1.0;

    double norm_f = 0.0;
    for (double v : a) norm_f += v * v;
    norm_f = std::sqrt(norm_f);
    const double conv_tol = 1e-15 * std::max(norm_f, 1e-300);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double v = a[static_cast<std::size_t>(p) * n + q];
                s += 2.0 * v * v;
            }
        return std::sqrt(s);
    };

    const int max_sweeps = 100;
    double off = off_norm();
    for (int sweep = 0; sweep < max_sweeps && off > conv_tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * n + p];
                const double aqq = a[static_cast<std::size_t>(q) * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                double* row_p = a.data() + static_cast<std::size_t>(p) * n;
                double* row_q = a.data() + static_cast<std::size_t>(q) * n;
                // two-sided rotation: rotate the rows, then restore symmetry by
                // mirroring and setting the 2x2 block analytically
                kernels::rot(row_p, row_q, static_cast<std::size_t>(n), c, s);
                row_p[p] = app - t * apq;
                row_q[q] = aqq + t * apq;
                row_p[q] = 0.0;
                row_q[p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    a[static_cast<std::size_t>(i) * n + p] = row_p[i];
                    a[static_cast<std::size_t>(i) * n + q] = row_q[i];
                }
                kernels::rot(w.data() + static_cast<std::size_t>(p) * n,
                             w.data() + static_cast<std::size_t>(q) * n,
                             static_cast<std::size_t>(n), c, s);
            }
        }
        off = off_norm();
    }
    if (off > conv_tol && off > 1e-12 * std::max(norm_f, 1e-300))
        throw convergence_error(
            "sym_eigen: Jacobi sweeps exhausted, off-diagonal norm " + std::to_string(off), off);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i) * n + i] < a[static_cast<std::size_t>(j) * n + j];
    });

    EigenDecomposition out;
    out.dim = n;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        out.values[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(perm[j]) * n + perm[j]];
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(i) * n + j] =
                w[static_cast<std::size_t>(perm[j]) * n + i];
    }
    return out;
}

std::vector<double> solve_linear(std::vector<double> A, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    if (n < 1 || A.size() != static_cast<std::size_t>(n) * n)
        throw domain_error("solve_linear: A must be n x n matching b");
    for (double v : A)
        if (!std::isfinite(v)) throw domain_error("solve_linear: non-finite matrix entry");

    double amax = 0.0;
    for (double v : A) amax = std::max(amax, std::abs(v));
    const double sing_tol = 1e-14 * std::max(amax, 1e-300);

    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(A[static_cast<std::size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(A[static_cast<std::size_t>(r) * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best <= sing_tol)
            throw singular_error("solve_linear: matrix singular to working precision at pivot " +
                                     std::to_string(col),
                                 col);
        if (piv != col) {
            for (int j = 0; j < n; ++j)
                std::swap(A[static_cast<std::size_t>(piv) * n + j],
                          A[static_cast<std::size_t>(col) * n + j]);
            std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(col)]);
        }
        const double d = A[static_cast<std::size_t>(col) * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = A[static_cast<std::size_t>(r) * n + col] / d;
            if (f == 0.0) continue;
            A[static_cast<std::size_t>(r) * n + col] = 0.0;
            kernels::axpy(-f, A.data() + static_cast<std::size_t>(col) * n + col + 1,
                          A.data() + static_cast<std::size_t>(r) * n + col + 1,
                          static_cast<std::size_t>(n - col - 1));
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
        }
    }

    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        const double tail = kernels::dot(A.data() + static_cast<std::size_t>(i) * n + i + 1,
                                         x.data() + i + 1, static_cast<std::size_t>(n - i - 1));
        x[static_cast<std::size_t>(i)] =
            (b[static_cast<std::size_t>(i)] - tail) / A[static_cast<std::size_t>(i) * n + i];
    }
    return x;
}

namespace {

double probe(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw domain_error("minimize_scalar: objective non-finite at x = " + std::to_string(x));
    return v;
}

} // namespace

std::pair<double, double> golden_section(const std::function<double(double)>& f, double a,
                                         double b, double tol) {
    if (!(a <= b)) throw domain_error("golden_section: need a <= b");
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = probe(f, c);
    double fd = probe(f, d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = probe(f, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = probe(f, d);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, probe(f, xm)};
}

std::pair<double, double> minimize_scalar(const std::function<double(double)>& f, double lo,
                                          double hi, double tol) {
    if (!(lo < hi)) throw domain_error("minimize_scalar: need lo < hi");
    if (!(tol > 0.0)) throw domain_error("minimize_scalar: need tol > 0");
    constexpr int kScan = 64;
    int best = 0;
    double fbest = 0.0;
    std::vector<double> xs(kScan);
    for (int i = 0; i < kScan; ++i) {
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (kScan - 1);
        const double v = probe(f, xs[static_cast<std::size_t>(i)]);
        if (i == 0 || v < fbest) {
            fbest = v;
            best = i;
        }
    }
    const double a = xs[static_cast<std::size_t>(std::max(0, best - 1))];
    const double b = xs[static_cast<std::size_t>(std::min(kScan - 1, best + 1))];
    return golden_section(f, a, b, tol);
}

} // namespace lsf
