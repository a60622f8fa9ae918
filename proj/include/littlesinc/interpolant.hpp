#pragma once

#include "littlesinc/grid.hpp"

#include <functional>
#include <vector>

namespace lsf {

// Cardinal interpolant. For kind LSF the coefficients are simply the node
// samples (cardinality makes them the natural representation and keeps
// node round-trips exact). For kind MappedSinc the expansion runs over the
// 2N+1 conformally mapped nodes xbar_k = (a + b e^{kh}) / (1 + e^{kh}) and
// evaluates sinc functions at phi(x) = log((x-a)/(b-x)).
struct Interpolant {
    enum class Kind { LSF, MappedSinc };
    Kind kind = Kind::LSF;

    // LSF fields
    Grid grid;
    std::vector<double> samples; // N-1 node samples

    // MappedSinc fields
    double a = 0.0, b = 0.0, h = 0.0;
    std::vector<double> mapped_nodes;   // xbar_k, k = -N..N
    std::vector<double> mapped_samples; // f(xbar_k)
};

// Little-sinc interpolant from node samples (length must be N-1).
Interpolant interpolate(const Grid& grid, const std::vector<double>& samples);

// Evaluate either kind. MappedSinc requires a < x < b (the map diverges at
// the endpoints).
double eval_interpolant(const Interpolant& itp, double x);

// Conformally mapped sinc interpolant of f on (a, b) with spacing h and
// index range k = -N..N (2N+1 basis functions).
Interpolant conformal_sinc_interpolate(const std::function<double(double)>& f, double a,
                                       double b, double h, int N);

} // namespace lsf
