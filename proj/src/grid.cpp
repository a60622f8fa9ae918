#include "littlesinc/grid.hpp"

#include "littlesinc/errors.hpp"

#include <cmath>

namespace lsf {

Grid make_grid(int N, double a, double b) {
    if (N < 4 || N % 2 != 0) throw domain_error("make_grid: N must be even and at least 4");
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw domain_error("make_grid: need finite a < b");
    Grid g;
    g.N = N;
    g.L = 0.5 * (b - a);
    g.h = 2.0 * g.L / N;
    g.center = 0.5 * (a + b);
    g.scale = 1.0;
    g.nodes.resize(static_cast<std::size_t>(N - 1));
    for (int k = g.k_min(); k <= g.k_max(); ++k)
        g.nodes[static_cast<std::size_t>(k - g.k_min())] = g.center + k * g.h;
    return g;
}

} // namespace lsf
