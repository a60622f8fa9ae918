#include "littlesinc/diff_matrix.hpp"

#include "littlesinc/errors.hpp"

#include <cmath>
#include <numbers>

namespace lsf {

namespace {

constexpr double kPi = std::numbers::pi;

double minus_one_pow(int p) { return (p % 2 == 0) ? 1.0 : -1.0; }

void check_grid(const Grid& grid) {
    if (grid.N < 4 || grid.N % 2 != 0 || !(grid.L > 0.0))
        throw domain_error("diff matrix: invalid grid");
}

} // namespace

DiffMatrix lsf_d1_matrix(const Grid& grid) {
    check_grid(grid);
    const int N = grid.N;
    const int dim = N - 1;
    const double L = grid.L;
    // |j|, |k| <= N/2 - 1 keeps every tan/cot argument strictly inside
    // (-pi/2, pi/2), so no entry is singular.
    DiffMatrix m;
    m.order = 1;
    m.dim = dim;
    m.entries.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    const double pref = kPi / (4.0 * L);
    for (int i = 0; i < dim; ++i) {
        const int k = i - N / 2 + 1;
        for (int j = 0; j < dim; ++j) {
            const int jj = j - N / 2 + 1;
            double v;
            if (jj == k) {
                v = pref * std::tan(jj * kPi / N);
            } else {
                v = minus_one_pow(k - jj) * pref *
                    (1.0 / std::tan((jj - k) * kPi / (2.0 * N)) +
                     std::tan((jj + k) * kPi / (2.0 * N)));
            }
            m.at(i, j) = v * grid.scale;
        }
    }
    return m;
}

DiffMatrix lsf_d2_matrix(const Grid& grid) {
    check_grid(grid);
    const int N = grid.N;
    const int dim = N - 1;
    const double L = grid.L;
    DiffMatrix m;
    m.order = 2;
    m.dim = dim;
    m.entries.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    const double s2 = grid.scale * grid.scale;
    const double diag_pref = -kPi * kPi / (24.0 * L * L);
    const double off_pref = -kPi * kPi / (8.0 * L * L);
    for (int i = 0; i < dim; ++i) {
        const int k = i - N / 2 + 1;
        for (int j = i; j < dim; ++j) {
            const int jj = j - N / 2 + 1;
            double v;
            if (jj == k) {
                const double c = std::cos(jj * kPi / N);
                v = diag_pref * (1.0 + 2.0 * N * N - 3.0 / (c * c));
            } else {
                const double cj = std::cos(jj * kPi / N);
                const double ck = std::cos(k * kPi / N);
                const double cp = std::cos((jj + k) * kPi / (2.0 * N));
                const double sm = std::sin((jj - k) * kPi / (2.0 * N));
                v = minus_one_pow(jj - k) * off_pref * cj * ck / (cp * cp * sm * sm);
            }
            v *= s2;
            m.at(i, j) = v;
            m.at(j, i) = v; // symmetric under k <-> j
        }
    }
    return m;
}

} // namespace lsf
