#include "littlesinc/bvp.hpp"

#include "littlesinc/diff_matrix.hpp"
#include "littlesinc/errors.hpp"
#include "littlesinc/kernels.hpp"
#include "littlesinc/linalg.hpp"
#include "littlesinc/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lsf {

BVPSolution solve_linear_bvp(const BVPProblem& prob, int N) {
    if (prob.ua != 0.0 || prob.ub != 0.0)
        throw domain_error("solve_linear_bvp: only homogeneous boundary values are supported");
    const Grid grid = make_grid(N, prob.a, prob.b);
    const DiffMatrix d1 = lsf_d1_matrix(grid);
    const DiffMatrix d2 = lsf_d2_matrix(grid);
    const int dim = grid.size();

    std::vector<double> A(static_cast<std::size_t>(dim) * dim, 0.0);
    std::vector<double> rhs(static_cast<std::size_t>(dim), 0.0);
    for (int j = 0; j < dim; ++j) {
        const double xj = grid.nodes[static_cast<std::size_t>(j)];
        const double p2 = prob.p2(xj);
        const double p1 = prob.p1(xj);
        const double p0 = prob.p0(xj);
        if (p2 == 0.0)
            throw domain_error("solve_linear_bvp: p2 vanishes at node x = " + std::to_string(xj));
        if (!std::isfinite(p2) || !std::isfinite(p1) || !std::isfinite(p0))
            throw domain_error("solve_linear_bvp: non-finite coefficient at node x = " +
                               std::to_string(xj));
        for (int k = 0; k < dim; ++k)
            A[static_cast<std::size_t>(j) * dim + k] =
                p2 * d2.at(k, j) + p1 * d1.at(k, j) + (k == j ? p0 : 0.0);
        rhs[static_cast<std::size_t>(j)] = prob.g(xj);
    }

    BVPSolution sol;
    sol.grid = grid;
    sol.u = solve_linear(std::move(A), std::move(rhs));
    sol.as_interpolant = interpolate(grid, sol.u);
    return sol;
}

double global_error(const BVPSolution& sol, const std::function<double(double)>& u_exact) {
    const double exact = integrate([&](double x) { const double v = u_exact(x); return v * v; },
                                   sol.grid.a(), sol.grid.b(), 200);
    const double discrete =
        sol.grid.h * kernels::dot(sol.u.data(), sol.u.data(), sol.u.size());
    const double diff = std::abs(exact - discrete);
    if (diff == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log10(diff);
}

double local_error(const BVPSolution& sol, const std::function<double(double)>& u_exact,
                   double x0) {
    if (!(x0 > sol.grid.a() && x0 < sol.grid.b()))
        throw domain_error("local_error: x0 must lie inside (a, b)");
    const double diff = std::abs(u_exact(x0) - eval_interpolant(sol.as_interpolant, x0));
    if (diff == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log10(diff);
}

} // namespace lsf
