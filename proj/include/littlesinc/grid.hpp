#pragma once

#include <vector>

namespace lsf {

// Uniform collocation mesh for the little-sinc basis on a finite interval.
// The canonical frame is (-L, L) with spacing h = 2L/N and N-1 interior
// nodes y_k = k*h for k in {-N/2+1, ..., N/2-1}; a physical interval (a, b)
// maps onto it by x_canonical = (x - center) * scale.
struct Grid {
    int N = 0;         // even mesh parameter, N >= 4; basis size is N-1
    double L = 0.0;    // canonical half-length
    double h = 0.0;    // node spacing, 2L/N exactly
    double center = 0.0;
    double scale = 1.0;
    std::vector<double> nodes; // N-1 physical nodes, strictly increasing

    int size() const { return N - 1; }
    int k_min() const { return -N / 2 + 1; }
    int k_max() const { return N / 2 - 1; }
    // node for basis index k (k_min..k_max)
    double node(int k) const { return nodes[static_cast<std::size_t>(k - k_min())]; }
    double a() const { return center - L / scale; }
    double b() const { return center + L / scale; }
};

// Mesh over (a, b) with the half-length convention L = (b-a)/2 (scale = 1):
// node_k = center + k*h. Throws lsf::domain_error for odd N, N < 4, a >= b.
Grid make_grid(int N, double a, double b);

} // namespace lsf
