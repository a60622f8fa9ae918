#pragma once

#include "littlesinc/grid.hpp"

#include <vector>

namespace lsf {

// Dense derivative-coefficient matrix for the little-sinc basis:
// entry(i, j) = d^order s_{k_i} / dx^order evaluated at node x_{k_j}, with
// row/column indices i, j = 0..N-2 mapping to k = i - N/2 + 1. Entries are
// in the physical frame (canonical entries times scale^order).
struct DiffMatrix {
    int order = 0; // 1 or 2
    int dim = 0;   // N - 1
    std::vector<double> entries; // row-major, dim x dim

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
};

// First-derivative matrix:
//   diagonal  (j = k):  (pi / 4L) tan(j pi / N)
//   off-diag  (j != k): (-1)^(k-j) (pi / 4L) [cot((j-k) pi / 2N) + tan((j+k) pi / 2N)]
DiffMatrix lsf_d1_matrix(const Grid& grid);

// Second-derivative matrix (exactly symmetric by construction):
//   diagonal:  -(pi^2 / 24 L^2) (1 + 2 N^2 - 3 / cos^2(j pi / N))
//   off-diag:  -(-1)^(j-k) (pi^2 / 8 L^2) cos(j pi/N) cos(k pi/N)
//                / [cos^2((j+k) pi / 2N) sin^2((j-k) pi / 2N)]
DiffMatrix lsf_d2_matrix(const Grid& grid);

} // namespace lsf
